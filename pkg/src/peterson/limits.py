"""Resource caps, overridable through environment variables.

``PETERSON_MAX_RANK``      largest n for full 2^(n-1) enumerations (default 20)
``PETERSON_ORACLE_RANK``   largest n for CLI oracle sweeps (default 12)
``PETERSON_GROEBNER_RANK`` largest n for presentation/Groebner work (default 6)
``PETERSON_MAX_PAIRS``     Buchberger pair budget (default 100000)
``PETERSON_MAX_DEGREE``    Buchberger total-degree ceiling (default 30)
"""

import os

DEFAULTS = {
    "PETERSON_MAX_RANK": 20,
    "PETERSON_ORACLE_RANK": 12,
    "PETERSON_GROEBNER_RANK": 6,
    "PETERSON_MAX_PAIRS": 100_000,
    "PETERSON_MAX_DEGREE": 30,
}


def cap(name):
    raw = os.environ.get(name)
    if raw is None:
        return DEFAULTS[name]
    return int(raw)


def max_rank():
    return cap("PETERSON_MAX_RANK")


def oracle_rank():
    return cap("PETERSON_ORACLE_RANK")


def groebner_rank():
    return cap("PETERSON_GROEBNER_RANK")


def max_pairs():
    return cap("PETERSON_MAX_PAIRS")


def max_degree():
    return cap("PETERSON_MAX_DEGREE")
