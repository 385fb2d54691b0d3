import os
from dataclasses import dataclass, replace

ENV_MAX_CARRIER = "LOCALE_LAB_MAX_CARRIER"


@dataclass(frozen=True)
class Caps:
    """Size limits for construction and exhaustive scans.

    ``max_carrier`` bounds frames we are willing to tabulate at all,
    ``max_triple`` bounds carriers scanned over all triples (distributivity,
    residuation), ``max_nuclei`` bounds the fix-set enumeration (2^n subsets).
    """

    max_carrier: int = 4096
    max_triple: int = 64
    max_nuclei: int = 12
    max_space_points: int = 10
    max_topology_points: int = 4
    max_powerset: int = 12

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if value <= 0:
                raise ValueError(f"cap {name} must be positive, got {value}")


def default_caps() -> Caps:
    caps = Caps()
    raw = os.environ.get(ENV_MAX_CARRIER)
    if raw:
        caps = replace(caps, max_nuclei=int(raw))
    return caps


CAPS = default_caps()


def caps() -> Caps:
    return CAPS


def set_caps(new: Caps) -> Caps:
    """Install ``new`` globally and return the previous caps."""
    global CAPS
    old, CAPS = CAPS, new
    return old
