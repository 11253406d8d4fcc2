"""Complexity functions of infinite words: subword, abelian, additive.

Everything here is computed from finite windows of a fixed-point
stream.  A window is never trusted at face value: each quantity is
recomputed on a doubled window until it stops changing, so a window
that is too short to contain every relevant factor cannot produce a
silently wrong answer.  The starting window of max(4096, 64n) symbols
is far beyond the measured recurrence scale of the built-in streams;
the doubling loop is the safety net for arbitrary user morphisms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .morphisms import FixedPointStream
from .words import Alphabet, Coding, ResourceLimitError, Word, WordDomainError

DEFAULT_WINDOW_CAP = 1 << 26

CSV_COLUMNS = ("n", "rho", "rho_ab", "rho_plus", "ds_min", "ds_max", "evenness")


def recurrence_safe_window(n: int) -> int:
    """Initial window length used when scanning factors of length n."""
    return max(4096, 64 * n)


def distinct_substring_profile(data, n_max: int) -> np.ndarray:
    """Count distinct substrings of each length 1..n_max of ``data``.

    Suffix automaton construction; each state contributes one distinct
    substring per length in [link.len + 1, len].  Returns an int64
    array p with p[i] = number of distinct substrings of length i + 1.
    """
    if n_max < 1:
        return np.zeros(0, dtype=np.int64)
    sa_len = [0]
    sa_link = [-1]
    sa_next: list[dict[int, int]] = [{}]
    last = 0
    seq = data.tolist() if isinstance(data, np.ndarray) else list(data)
    for ch in seq:
        cur = len(sa_len)
        sa_len.append(sa_len[last] + 1)
        sa_link.append(-1)
        sa_next.append({})
        p = last
        while p != -1 and ch not in sa_next[p]:
            sa_next[p][ch] = cur
            p = sa_link[p]
        if p == -1:
            sa_link[cur] = 0
        else:
            q = sa_next[p][ch]
            if sa_len[p] + 1 == sa_len[q]:
                sa_link[cur] = q
            else:
                clone = len(sa_len)
                sa_len.append(sa_len[p] + 1)
                sa_link.append(sa_link[q])
                sa_next.append(dict(sa_next[q]))
                while p != -1 and sa_next[p].get(ch) == q:
                    sa_next[p][ch] = clone
                    p = sa_link[p]
                sa_link[q] = clone
                sa_link[cur] = clone
        last = cur
    diff = np.zeros(n_max + 2, dtype=np.int64)
    for st in range(1, len(sa_len)):
        lo = sa_len[sa_link[st]] + 1
        hi = min(sa_len[st], n_max)
        if lo <= hi:
            diff[lo] += 1
            diff[hi + 1] -= 1
    return np.cumsum(diff[1 : n_max + 1])


def enumerate_factors(w: Word, n: int) -> list[Word]:
    """Distinct length-n factors of a finite word, in first-occurrence order."""
    if n < 1 or n > len(w):
        return []
    seen: dict[bytes, None] = {}
    data = w.symbols
    for i in range(len(data) - n + 1):
        seen.setdefault(data[i : i + n])
    return [Word(w.alphabet, b) for b in seen]


@dataclass(frozen=True)
class FactorIndex:
    """Distinct length-n factors of a stream with their first occurrences."""

    n: int
    prefix_len: int
    alphabet: Alphabet
    first_occurrence: dict[bytes, int]

    def __len__(self) -> int:
        return len(self.first_occurrence)

    def __contains__(self, item) -> bool:
        if isinstance(item, Word):
            item = item.symbols
        return item in self.first_occurrence

    def factors(self) -> list[Word]:
        return [Word(self.alphabet, b) for b in self.first_occurrence]


class FactorScanner:
    """Window-backed computation of complexity data for one stream.

    Caches cumulative sums and the distinct-substring profile, so
    sweeping n over a range touches each window only a handful of
    times.  ``coding`` changes which integer is summed per letter for
    the digit-sum quantities; it does not affect subword or abelian
    counts.  All answers are stabilized by window doubling, bounded by
    ``window_cap``.
    """

    def __init__(
        self,
        stream: FixedPointStream,
        coding: Coding | None = None,
        window_cap: int = DEFAULT_WINDOW_CAP,
    ):
        if coding is not None and coding.alphabet != stream.alphabet:
            raise WordDomainError("coding over a different alphabet")
        self.stream = stream
        self.coding = coding
        self.window_cap = min(window_cap, stream.cap)
        values = coding.values if coding is not None else stream.alphabet.letters
        self._values = np.array(values, dtype=np.int64)
        self._ds_cumsum: np.ndarray | None = None
        self._letter_cumsums: dict[int, np.ndarray] = {}
        self._profile: np.ndarray | None = None
        self._profile_n_max = 0

    @property
    def alphabet(self) -> Alphabet:
        return self.stream.alphabet

    def _window(self, length: int) -> np.ndarray:
        if length > self.window_cap:
            raise ResourceLimitError(
                f"window {length} exceeds cap {self.window_cap}; "
                "raise window_cap if the stream really needs it"
            )
        return self.stream.array(length)

    def _stable(self, n: int, fn):
        """fn over a window of ``length``, doubled until the answer repeats."""
        length = recurrence_safe_window(n)
        first = fn(self._window(length))
        while True:
            length *= 2
            second = fn(self._window(length))
            if first == second:
                return second
            first = second

    def _ds_sums(self, length: int) -> np.ndarray:
        cs = self._ds_cumsum
        if cs is None or len(cs) < length + 1:
            arr = self._window(length)
            cs = np.concatenate(([0], np.cumsum(self._values[arr])))
            self._ds_cumsum = cs
        return cs

    def _letter_cs(self, letter: int, length: int) -> np.ndarray:
        cs = self._letter_cumsums.get(letter)
        if cs is None or len(cs) < length + 1:
            arr = self._window(length)
            cs = np.concatenate(([0], np.cumsum((arr == letter).astype(np.int64))))
            self._letter_cumsums[letter] = cs
        return cs

    def digit_sum_set(self, n: int) -> frozenset[int]:
        """Set of digit sums attained by length-n factors."""
        if n < 1:
            raise WordDomainError("factor length must be positive")

        def sums(window: np.ndarray) -> frozenset[int]:
            cs = self._ds_sums(len(window))[: len(window) + 1]
            vals = cs[n:] - cs[: len(window) - n + 1]
            lo = int(vals.min())
            present = np.bincount(vals - lo)
            return frozenset((np.nonzero(present)[0] + lo).tolist())

        return self._stable(n, sums)

    def additive_complexity(self, n: int) -> int:
        return len(self.digit_sum_set(n))

    def parikh_set(self, n: int) -> frozenset[tuple[int, ...]]:
        """Set of letter-count vectors attained by length-n factors."""
        if n < 1:
            raise WordDomainError("factor length must be positive")
        k = self.alphabet.size

        def vectors(window: np.ndarray) -> frozenset[tuple[int, ...]]:
            L = len(window)
            cols = []
            for letter in range(k):
                cs = self._letter_cs(letter, L)[: L + 1]
                cols.append(cs[n:] - cs[: L - n + 1])
            rows = np.unique(np.column_stack(cols), axis=0)
            return frozenset(map(tuple, rows.tolist()))

        return self._stable(n, vectors)

    def abelian_complexity(self, n: int) -> int:
        return len(self.parikh_set(n))

    def evenness(self, n: int) -> int:
        """Largest letter-count disparity over length-n factors.

        max over factors u and letter pairs (a, b) of |u|_a - |u|_b.
        """
        return max(max(v) - min(v) for v in self.parikh_set(n))

    def distinct_profile(self, n_max: int) -> np.ndarray:
        """rho(1..n_max) as an array; cached and extended on demand."""
        if n_max < 1:
            return np.zeros(0, dtype=np.int64)
        if self._profile is None or self._profile_n_max < n_max:

            def profile(window: np.ndarray) -> tuple[int, ...]:
                return tuple(distinct_substring_profile(window, n_max).tolist())

            stabilized = self._stable(n_max, profile)
            self._profile = np.array(stabilized, dtype=np.int64)
            self._profile_n_max = n_max
        return self._profile[:n_max]

    def subword_complexity(self, n: int) -> int:
        if n < 1:
            raise WordDomainError("factor length must be positive")
        return int(self.distinct_profile(max(n, self._profile_n_max))[n - 1])

    def factor_index(self, n: int) -> FactorIndex:
        """All length-n factors with first-occurrence positions."""
        if n < 1:
            raise WordDomainError("factor length must be positive")
        target = self.subword_complexity(n)
        length = recurrence_safe_window(n)
        while True:
            data = self._window(length).tobytes()
            first: dict[bytes, int] = {}
            for i in range(len(data) - n + 1):
                b = data[i : i + n]
                if b not in first:
                    first[b] = i
                    if len(first) == target:
                        return FactorIndex(n, length, self.alphabet, first)
            length *= 2

    def recurrence_index(self, n: int) -> int:
        """Shortest prefix length containing every length-n factor."""
        target = self.subword_complexity(n)
        length = recurrence_safe_window(n)
        while True:
            data = self._window(length).tobytes()
            seen: set[bytes] = set()
            for i in range(len(data) - n + 1):
                b = data[i : i + n]
                if b not in seen:
                    seen.add(b)
                    if len(seen) == target:
                        return i + n
            length *= 2


def _scanner(source, coding: Coding | None = None) -> FactorScanner:
    if isinstance(source, FactorScanner):
        if coding is not None and source.coding != coding:
            raise WordDomainError("scanner already carries a different coding")
        return source
    return FactorScanner(source, coding)


def subword_complexity(source, n: int) -> int:
    return _scanner(source).subword_complexity(n)


def abelian_complexity(source, n: int) -> int:
    return _scanner(source).abelian_complexity(n)


def additive_complexity(source, n: int, coding: Coding | None = None) -> int:
    return _scanner(source, coding).additive_complexity(n)


def digit_sum_set(source, n: int, coding: Coding | None = None) -> frozenset[int]:
    return _scanner(source, coding).digit_sum_set(n)


def evenness(source, n: int) -> int:
    return _scanner(source).evenness(n)


def recurrence_index(source, n: int) -> int:
    return _scanner(source).recurrence_index(n)


@dataclass(frozen=True)
class ComplexityRow:
    n: int
    rho: int
    rho_ab: int
    rho_plus: int
    ds_min: int
    ds_max: int
    evenness: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.n, self.rho, self.rho_ab, self.rho_plus, self.ds_min, self.ds_max, self.evenness)


@dataclass
class ComplexityTable:
    rows: list[ComplexityRow] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = [",".join(CSV_COLUMNS)]
        for row in self.rows:
            lines.append(",".join(str(x) for x in row.as_tuple()))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = [dict(zip(CSV_COLUMNS, row.as_tuple())) for row in self.rows]
        return json.dumps(payload, indent=2) + "\n"

    def write(self, path: str | Path, fmt: str = "csv") -> None:
        text = self.to_csv() if fmt == "csv" else self.to_json()
        Path(path).write_text(text)


def build_complexity_table(
    source,
    n_from: int,
    n_to: int,
    coding: Coding | None = None,
    window_cap: int = DEFAULT_WINDOW_CAP,
) -> ComplexityTable:
    if n_from < 1 or n_to < n_from:
        raise WordDomainError("need 1 <= n_from <= n_to")
    if isinstance(source, FactorScanner):
        scanner = _scanner(source, coding)
    else:
        scanner = FactorScanner(source, coding, window_cap)
    profile = scanner.distinct_profile(n_to)
    rows = []
    for n in range(n_from, n_to + 1):
        ds = scanner.digit_sum_set(n)
        pset = scanner.parikh_set(n)
        rows.append(
            ComplexityRow(
                n=n,
                rho=int(profile[n - 1]),
                rho_ab=len(pset),
                rho_plus=len(ds),
                ds_min=min(ds),
                ds_max=max(ds),
                evenness=max(max(v) - min(v) for v in pset),
            )
        )
    return ComplexityTable(rows)
