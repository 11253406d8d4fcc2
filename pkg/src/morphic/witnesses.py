"""Extremal factors of the doubling fixed point, built in closed form.

For each length n this module assembles a specific factor whose digit
sum sits at the top of the attainable range, together with the exact
occurrence context that proves it really is a factor.  The word is
glued from substitution powers of two letter families:

  surplus_letter(k): the letter whose k-th substitution power carries
    one more 2 than 0 (period 6 in k, defined from k = -1), and
  balanced_letter(l): the letter whose l-th power carries equally many.

The substitution is implemented locally on bytes rather than through
the stream generator; keeping the two routes separate means agreement
between them is evidence, not circularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .morphisms import DEFAULT_LENGTH_CAP, FixedPointStream, preset
from .words import Word, WordDomainError, digit_sum, ternary_alphabet

_IMAGES = (bytes((0, 1)), bytes((1, 2)), bytes((2, 0)))

_SURPLUS_BY_RESIDUE = {0: 2, 1: 1, 2: 1, 3: 0, 4: 0, 5: 2}


def surplus_letter(k: int) -> int:
    """Letter whose k-th substitution power has a single excess 2 over 0."""
    if k < -1:
        raise WordDomainError("surplus_letter is defined from k = -1")
    return _SURPLUS_BY_RESIDUE[k % 6]


def balanced_letter(l: int) -> int:
    """Letter whose l-th substitution power has equally many 2s and 0s."""
    if l < 0:
        raise WordDomainError("balanced_letter needs l >= 0")
    return (l + 1) % 3


@lru_cache(maxsize=256)
def sigma_power_bytes(letter: int, e: int) -> bytes:
    """sigma^e(letter) for the doubling substitution, as raw bytes."""
    if not 0 <= letter <= 2:
        raise WordDomainError("letter must be 0, 1 or 2")
    if e < 0:
        raise WordDomainError("power must be non-negative")
    if e == 0:
        return bytes((letter,))
    prev = sigma_power_bytes(letter, e - 1)
    return b"".join(_IMAGES[s] for s in prev)


def sigma_power(letter: int, e: int) -> Word:
    return Word(ternary_alphabet(), sigma_power_bytes(letter, e))


def ternary_stream(cap: int = DEFAULT_LENGTH_CAP) -> FixedPointStream:
    """Fresh stream of the doubling fixed point 0112122012202001..."""
    m, seed = preset("tml")
    return FixedPointStream(m, seed, cap)


@dataclass(frozen=True)
class WitnessDecomposition:
    """A maximal-digit-sum factor of length n, split at its anchor 2.

    ``bits`` are the low k bits of n (n = 2^k + sum bits[i] 2^i), least
    significant first; they select which substitution powers appear.
    """

    n: int
    k: int
    bits: tuple[int, ...]
    left: Word
    right: Word

    @property
    def whole(self) -> Word:
        return self.left + self.right

    @property
    def target_digit_sum(self) -> int:
        return self.n + self.k + 1


def witness(n: int) -> WitnessDecomposition:
    """Length-n factor attaining digit sum n + floor(log2 n) + 1."""
    if n < 1:
        raise WordDomainError("witness length must be positive")
    alpha = ternary_alphabet()
    k = n.bit_length() - 1
    rem = n - (1 << k)
    bits = tuple((rem >> i) & 1 for i in range(k))
    if n == 1:
        w = WitnessDecomposition(1, 0, (), Word(alpha), Word(alpha, b"\x02"))
    else:
        left = bytearray()
        if bits[0] == 1:
            left.append(1)
        left.append(2)
        for i in range(1, (k - 1) // 2 + 1):
            e = 2 * i + bits[2 * i]
            left += sigma_power_bytes(surplus_letter(e), e)
        right = bytearray()
        for i in range((k - 1 + 1) // 2, 0, -1):
            e = 2 * i - 1 + bits[2 * i - 1]
            right += sigma_power_bytes(surplus_letter(e), e)
        right.append(2)
        w = WitnessDecomposition(n, k, bits, Word(alpha, bytes(left)), Word(alpha, bytes(right)))
    if len(w.whole) != n:
        raise RuntimeError(f"witness assembly produced length {len(w.whole)}, wanted {n}")
    return w


@lru_cache(maxsize=32)
def letter_pair_haystacks(K: int) -> tuple[bytes, ...]:
    """sigma^K(xy) for all nine ordered letter pairs xy."""
    return tuple(
        sigma_power_bytes(x, K) + sigma_power_bytes(y, K)
        for x in range(3)
        for y in range(3)
    )


def is_factor(u) -> bool:
    """Exact membership test for factors of the doubling fixed point.

    Every adjacent letter pair occurs in the fixed point, and the fixed
    point is invariant under the substitution, so any factor of length
    at most 2^K lies inside sigma^K(xy) for some adjacent pair xy.
    Checking all nine ordered pairs is therefore sound and complete.
    """
    data = u.symbols if isinstance(u, Word) else bytes(u)
    if not data:
        return True
    if max(data) > 2:
        return False
    K = (len(data) - 1).bit_length()
    return any(data in hay for hay in letter_pair_haystacks(K))


@lru_cache(maxsize=32)
def decomposition_haystack(k: int) -> bytes:
    """Occurrence context covering every witness with 2^k <= n < 2^(k+1)."""
    if k < 1:
        raise WordDomainError("decomposition context needs k >= 1")
    return sigma_power_bytes(surplus_letter(k + 2), k + 1) + sigma_power_bytes(
        surplus_letter(k - 2), k + 1
    )


def witness_occurrence(n: int) -> int:
    """Index of the length-n witness inside its occurrence context.

    For n = 1 the context is the first letters of the stream itself.
    Raises if the witness does not occur, which would falsify the
    whole construction.
    """
    w = witness(n)
    needle = w.whole.symbols
    if n == 1:
        hay = bytes(ternary_stream().array(8))
    else:
        hay = decomposition_haystack(w.k)
    idx = hay.find(needle)
    if idx < 0:
        raise RuntimeError(f"witness of length {n} missing from its occurrence context")
    return idx


def witness_word(n: int) -> Word:
    return witness(n).whole


def witness_digit_sum(n: int) -> int:
    return digit_sum(witness(n).whole)
