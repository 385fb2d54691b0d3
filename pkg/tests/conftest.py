import functools

import pytest

from localelab import config, corpus


@functools.lru_cache(maxsize=None)
def frames(max_size=None):
    return tuple(corpus.corpus_frames(max_size=max_size))


@functools.lru_cache(maxsize=None)
def omega_frames(max_size=8):
    return tuple(corpus.corpus_omega_frames(max_size=max_size))


@pytest.fixture(autouse=True)
def _restore_caps():
    saved = config.caps()
    yield
    config.set_caps(saved)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
