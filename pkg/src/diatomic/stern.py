"""Stern's diatomic sequence and its word-combinatorial readings.

The sequence s(0) = 0, s(1) = 1, s(2n) = s(n), s(2n+1) = s(n) + s(n+1)
is evaluated by four independent routes: the defining recurrence, the
Christoffel-length correspondence (odd arguments are lengths of
Christoffel words, even ones minimal periods of central words), the
Calkin-Wilf subword count (occurrences of b(ab)* patterns in the binary
expansion), and a signed continuant over the ruler-sequence entries.
The routes share no code, so their agreement is a meaningful check.

The module also houses the occurrence-level refinement of the
Calkin-Wilf theorem (sorted marked occurrences spell out a standard
word) and the Coons-Shallit weighted factor decomposition of Christoffel
lengths.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import NamedTuple

from .continuants import continuant
from .palindromes import period_pair
from .words import BudgetError, complement, decode, encode, integral_rep, plus_prefix

#: Stern values with arguments below this limit are memoized; larger
#: arguments fall back to an uncached logarithmic bit descent.
STERN_CACHE_LIMIT = 1 << 20

_stern_cache: dict[int, int] = {0: 0, 1: 1}
_stern_lock = threading.Lock()


def stern(n: int) -> int:
    """s(n) by the memoized halving recurrence.

    >>> [stern(n) for n in range(12)]
    [0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5]
    """
    if n < 0:
        raise ValueError("Stern's sequence is indexed by non-negative integers")
    if n >= STERN_CACHE_LIMIT:
        return _stern_descent(n)
    return _stern_cached(n)


def _stern_cached(n: int) -> int:
    cached = _stern_cache.get(n)
    if cached is not None:
        return cached
    half, odd = divmod(n, 2)
    value = _stern_cached(half) + (_stern_cached(half + 1) if odd else 0)
    with _stern_lock:
        _stern_cache[n] = value
    return value


def _stern_descent(n: int) -> int:
    # pair (s(m), s(m+1)) driven along the bits of n below the top one
    u, v = 1, 1
    for i in range(n.bit_length() - 2, -1, -1):
        if (n >> i) & 1:
            u = u + v
        else:
            v = u + v
    return u


def stern_via_christoffel(n: int) -> int:
    """s(n) through word lengths: trailing binary zeros are stripped
    (s(2m) = s(m)); an odd n > 1 reads b w b in binary and s(n) is the
    length of the Christoffel word directed by w, i.e. the period sum
    of w.

    >>> stern_via_christoffel(89)
    17
    """
    if n < 0:
        raise ValueError("Stern's sequence is indexed by non-negative integers")
    if n == 0:
        return 0
    n >>= (n & -n).bit_length() - 1
    if n == 1:
        return 1
    return sum(period_pair(decode(n)[1:-1]))


def _pattern_count(host: str) -> int:
    """Occurrences in ``host`` of all subwords from the family b(ab)*.

    One pass with two accumulators: tuples already ending in b (complete
    patterns) and tuples ending in a (awaiting a closing b).  Every b
    both starts a fresh tuple and closes every pending one; every a
    extends every complete tuple.  This closes the infinite pattern
    family in linear time.
    """
    complete = pending = 0
    for c in host:
        if c == "b":
            complete += pending + 1
        else:
            pending += complete
    return complete


def stern_via_subwords(n: int) -> int:
    """s(n) as the number of alternating bit sets of n: occurrences of
    the subwords b, bab, babab, ... in the binary expansion of n.
    """
    if n < 0:
        raise ValueError("Stern's sequence is indexed by non-negative integers")
    return _pattern_count(decode(n))


def ruler(n: int) -> int:
    """Exponent of the largest power of 2 dividing n (n >= 1)."""
    if n < 1:
        raise ValueError("the ruler sequence starts at 1")
    return (n & -n).bit_length() - 1


def zeta(n: int) -> int:
    """Signed odd ruler values: (2 ruler(n) + 1) with the sign of (-1)^(n+1).

    >>> [zeta(n) for n in range(1, 9)]
    [1, -3, 1, -5, 1, -3, 1, -7]
    """
    magnitude = 2 * ruler(n) + 1
    return magnitude if n % 2 else -magnitude


def stern_via_zeta(n: int) -> int:
    """s(n) for n > 1 as a signed continuant over zeta(1..n-1):
    s(n) = (-1)^floor((n-1)/2) K[zeta_1, ..., zeta_{n-1}].
    """
    if n < 2:
        raise ValueError("the signed continuant form needs n > 1")
    sign = -1 if ((n - 1) // 2) % 2 else 1
    return sign * continuant(zeta(i) for i in range(1, n))


def stern_via_integral_continuant(w: str) -> int:
    """s at the tree number of ``w``, as the continuant of the integral
    representation (a0, ..., an) of w with the first entry bumped and the
    last dropped: K[a0 + 1, a1, ..., a_{n-1}].  Words with a one-entry
    representation (powers of b) sit at numbers 2^m, where the value is 1.

    >>> stern_via_integral_continuant("abba")
    7
    """
    rep = integral_rep(w)
    if len(rep) == 1:
        return 1
    return continuant([rep[0] + 1, *rep[1:-1]])


def reverse_bits(n: int) -> int:
    """Integer read from the reversed binary expansion of n; odd for all
    n > 0, and 0 for n = 0.
    """
    if n < 0:
        raise ValueError("negative integers have no binary expansion")
    if n == 0:
        return 0
    return int(format(n, "b")[::-1], 2)


class DeltaExpansion(NamedTuple):
    """Decomposition data for s(2n - 1) = 2 + sum of s(2^(k-1) + delta_k)."""

    level: int
    deltas: tuple[int, ...]
    terms: tuple[int, ...]

    @property
    def total(self) -> int:
        return 2 + sum(self.terms)


def delta_expansion(n: int) -> DeltaExpansion:
    """Expansion of s(2n - 1) into level-indexed Stern terms, n > 1.

    The level is ceil(log2 n) - 1 and each delta_k is a difference of
    floor divisions of n - 2^level - 1 by powers of two; the k-th term
    is s(2^(k-1) + delta_k).
    """
    if n <= 1:
        raise ValueError("the expansion needs n > 1")
    level = (n - 1).bit_length() - 1
    rest = n - (1 << level) - 1
    deltas = tuple(
        (rest >> (level - k)) - (rest >> (level - k + 1)) for k in range(1, level + 1)
    )
    terms = tuple(stern((1 << (k - 1)) + d) for k, d in enumerate(deltas, start=1))
    return DeltaExpansion(level, deltas, terms)


@dataclass(frozen=True)
class FactorDecomposition:
    """Christoffel length split over factors of b w b.

    ``base`` counts the letters b in the host; each factor that starts
    and ends with b contributes its occurrence count, weighted by 1 when
    it contains a single a and by the Christoffel length of its inner
    word (between the outermost a's) when it contains two or more.
    """

    word: str
    base: int
    single_a: tuple[tuple[str, int], ...]
    multi_a: tuple[tuple[str, str, int, int], ...]  # (factor, inner, weight, count)

    @property
    def total(self) -> int:
        return (
            self.base
            + sum(count for _, count in self.single_a)
            + sum(weight * count for _, _, weight, count in self.multi_a)
        )


def factor_decomposition(w: str) -> FactorDecomposition:
    """Decompose |a psi(w) b| over the factors of b w b.

    >>> d = factor_decomposition("ababa")
    >>> d.base, d.single_a, d.multi_a[0][:3], d.total
    (4, (('bab', 3),), ('babab', 'b', 3), 21)
    """
    host = "b" + w + "b"
    b_at = [i for i, c in enumerate(host) if c == "b"]
    counts: dict[str, int] = {}
    for x, i in enumerate(b_at):
        for j in b_at[x + 1 :]:
            u = host[i : j + 1]
            counts[u] = counts.get(u, 0) + 1
    single = []
    multi = []
    for u in sorted(counts, key=lambda f: (len(f), f)):
        n_a = u.count("a")
        if n_a == 0:
            continue  # all-b factors carry weight s(0) = 0
        if n_a == 1:
            single.append((u, counts[u]))
        else:
            inner = u[u.index("a") + 1 : u.rindex("a")]
            multi.append((u, inner, sum(period_pair(inner)), counts[u]))
    return FactorDecomposition(w, host.count("b"), tuple(single), tuple(multi))


def stern_factor_identity(n: int) -> bool:
    """Check the factor-occurrence form of s(n): the count of binary ones
    plus, for every factor occurrence u b with u starting in b, the Stern
    value of the complemented u.
    """
    if n < 0:
        raise ValueError("Stern's sequence is indexed by non-negative integers")
    host = decode(n)
    total = host.count("b")
    b_at = [i for i, c in enumerate(host) if c == "b"]
    for x, i in enumerate(b_at):
        for j in b_at[x + 1 :]:
            total += stern(encode(complement(host[i:j])))
    return total == stern(n)


class MarkedOccurrence(NamedTuple):
    """One b(ab)* subword occurrence in a host word, with its sort key."""

    occurrence: tuple[int, ...]
    reversed_key: tuple[int, ...]
    marker: str  # a when the occurrence starts at position 1, b otherwise

    @property
    def initial(self) -> bool:
        return self.occurrence[0] == 1


#: Default ceiling on the number of marked occurrences enumerated at once.
MARKED_OCCURRENCE_CAP = 10**6


def marked_occurrences(
    w: str, cap: int = MARKED_OCCURRENCE_CAP
) -> tuple[str, list[MarkedOccurrence]]:
    """All occurrences of b(ab)* subwords in b w b, sorted by decreasing
    reversed position tuple and marked a (initial) or b (non-initial).

    Read top to bottom, the markers spell psi(w) b a: the occurrence
    table is a standard word in disguise.  The number of rows equals the
    Christoffel length of w, which is checked against ``cap`` before
    enumerating.  Reversed keys compare as tuples, a proper prefix
    ranking below its extensions.
    """
    predicted = sum(period_pair(w))
    if predicted > cap:
        raise BudgetError(f"{predicted} occurrences exceed the cap of {cap}")
    host = "b" + w + "b"
    n = len(host)
    found: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], want: str) -> None:
        for j in range(prefix[-1] + 1, n + 1):
            if host[j - 1] == want:
                ext = prefix + (j,)
                if want == "b":
                    found.append(ext)
                    grow(ext, "a")
                else:
                    grow(ext, "b")

    for j in range(1, n + 1):
        if host[j - 1] == "b":
            found.append((j,))
            grow((j,), "a")

    marked = [
        MarkedOccurrence(occ, occ[::-1], "a" if occ[0] == 1 else "b") for occ in found
    ]
    marked.sort(key=lambda m: m.reversed_key, reverse=True)
    return "".join(m.marker for m in marked), marked


def initial_subword_count(v: str) -> int:
    """Occurrences of b(ab)* subwords in b v b that start at position 1;
    equals the number of letters a in the Christoffel word directed by v.
    """
    complete, pending = 1, 0  # the opening b alone
    for c in v + "b":
        if c == "b":
            complete += pending
        else:
            pending += complete
    return complete


def length_by_subword_count(v: str) -> int:
    """Christoffel length |a psi(v) b| as the b(ab)* subword count of b v b."""
    return _pattern_count("b" + v + "b")


def period_by_subword_count(v: str) -> int:
    """Minimal period of psi(v), non-constant v, as the b(ab)* subword
    count of the plus-prefix host.
    """
    return _pattern_count("b" + plus_prefix(v) + "b")
