"""Shared fixtures and independent oracles for the test suite.

The oracle functions here compute letters arithmetically, with no code
shared with the package's substitution machinery; tests lean on them
whenever a value could otherwise only be checked against itself.
"""

import pytest

from morphic.complexity import FactorScanner
from morphic.ivp import sigma3_stream
from morphic.witnesses import ternary_stream


def popcount_letter(i: int) -> int:
    """Letter i of the doubling fixed point: binary digit sum mod 3."""
    return bin(i).count("1") % 3


def digit3_letter(i: int) -> int:
    """Letter i of the rotation fixed point: ternary digit sum mod 3."""
    s = 0
    while i:
        i, d = divmod(i, 3)
        s += d
    return s % 3


def brute_factors(data: bytes, n: int) -> set[bytes]:
    return {data[i : i + n] for i in range(len(data) - n + 1)}


def brute_parikh_set(data: bytes, n: int, size: int = 3) -> set[tuple[int, ...]]:
    out = set()
    for i in range(len(data) - n + 1):
        w = data[i : i + n]
        out.add(tuple(w.count(bytes([s])) for s in range(size)))
    return out


@pytest.fixture(scope="session")
def tml():
    return ternary_stream()


@pytest.fixture(scope="session")
def s3():
    return sigma3_stream()


@pytest.fixture(scope="session")
def tml_scan(tml):
    return FactorScanner(tml)


@pytest.fixture(scope="session")
def s3_scan(s3):
    return FactorScanner(s3)
