"""Length statistics of Christoffel words of a fixed order.

The order of a proper Christoffel word is the length of its directive
word, so order k contributes 2^k words.  Their lengths live between
k + 2 (constant directives) and the Fibonacci number F(k+1) (alternating
directives), total mass 2 * 3^k, with structured gaps just above the
minimum and just below the maximum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .continuants import fib
from .words import BudgetError, complement

#: Default bound on the order accepted by the exhaustive enumerations.
MAX_ENUMERATED_ORDER = 26


@dataclass(frozen=True)
class LengthHistogram:
    """Counts C_k(n) of order-``order`` Christoffel words of length n."""

    order: int
    counts: dict[int, int]

    @property
    def mass(self) -> int:
        """Total number of words; equals 2^order."""
        return sum(self.counts.values())

    @property
    def weighted_mass(self) -> int:
        """Sum of all lengths; equals 2 * 3^order."""
        return sum(n * c for n, c in self.counts.items())

    @property
    def average_length(self) -> Fraction:
        return Fraction(self.weighted_mass, self.mass)

    @property
    def support(self) -> list[int]:
        return sorted(self.counts)


@dataclass(frozen=True)
class OrderSummary:
    order: int
    max_count: int
    argmax: list[int]
    missing: list[int]
    missing_count: int


def _check_order(k: int, max_order: int) -> None:
    if k < 0:
        raise ValueError("order must be non-negative")
    if k > max_order:
        raise BudgetError(
            f"order {k} enumerates 2^{k} = {2**k} directives; "
            f"the configured bound is {max_order}"
        )


def histogram(k: int, max_order: int = MAX_ENUMERATED_ORDER) -> LengthHistogram:
    """Length histogram of all 2^k order-k Christoffel words.

    Walks the directive tree once, carrying the period pair, so each of
    the 2^k leaves costs O(1); the result does not depend on traversal
    order.

    >>> histogram(3).counts
    {5: 2, 7: 4, 8: 2}
    """
    _check_order(k, max_order)
    counts: dict[int, int] = {}

    def walk(depth: int, pa: int, pb: int) -> None:
        if depth == k:
            n = pa + pb
            counts[n] = counts.get(n, 0) + 1
            return
        walk(depth + 1, pa, pa + pb)
        walk(depth + 1, pa + pb, pb)

    walk(0, 1, 1)
    return LengthHistogram(k, dict(sorted(counts.items())))


def summarize_histogram(h: LengthHistogram) -> OrderSummary:
    """Maximal multiplicity, its length arguments, and the missing lengths
    of an already computed histogram.
    """
    top = max(h.counts.values())
    argmax = sorted(n for n, c in h.counts.items() if c == top)
    lo, hi = h.order + 2, fib(h.order + 1)
    missing = [n for n in range(lo, hi + 1) if n not in h.counts]
    return OrderSummary(h.order, top, argmax, missing, len(missing))


def summarize(k: int, max_order: int = MAX_ENUMERATED_ORDER) -> OrderSummary:
    """Maximal multiplicity, its length arguments, and the missing lengths
    of order k.
    """
    return summarize_histogram(histogram(k, max_order))


def alternating(k: int, first: str = "a") -> str:
    """The length-k word whose letters strictly alternate, starting with
    ``first``; its Christoffel word is the longest of order k.
    """
    if first not in ("a", "b"):
        raise ValueError(f"first letter must be a or b: {first!r}")
    pair = first + complement(first)
    return (pair * (k // 2 + 1))[:k]


def almost_alternating(k: int) -> str:
    """The canonical order-k directive of the second-largest length:
    a b b followed by strict alternation.  Defined for k >= 3.
    """
    if k < 3:
        raise ValueError("almost alternating words start at length 3")
    v = "abb"
    for j in range(3, k):
        v += "a" if j % 2 else "b"
    return v


def word_class(v: str) -> set[str]:
    """The at-most-four words {v, reversal, complement, both}; all four
    direct Christoffel words of equal length.
    """
    rev = v[::-1]
    bar = complement(v)
    return {v, rev, bar, bar[::-1]}


def totient(n: int) -> int:
    """Euler's totient by trial division."""
    if n < 1:
        raise ValueError("totient is defined on positive integers")
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


def _directive_depth(p: int, q: int) -> int:
    # length of the directive whose period pair is (p, q), by run-collapsed
    # subtractive descent to (1, 1)
    depth = 0
    while p != q:
        if p < q:
            k = (q - 1) // p
            q -= k * p
        else:
            k = (p - 1) // q
            p -= k * q
        depth += k
    return depth


def counts_for_length(n: int) -> dict[int, int]:
    """C_k(n) for every order k, computed per length instead of per order.

    Each order-k Christoffel word of length n corresponds to a coprime
    period pair (p, n - p), and the order is the descent depth of that
    pair, so one pass over the phi(n) residues settles every k at once.
    The values sum to Euler's totient of n.
    """
    if n < 2:
        raise ValueError("proper Christoffel words have length at least 2")
    counts: dict[int, int] = {}
    for p in range(1, n):
        if gcd(p, n) == 1:
            k = _directive_depth(p, n - p)
            counts[k] = counts.get(k, 0) + 1
    return dict(sorted(counts.items()))


def totient_identity_check(n_max: int) -> bool:
    """Whether sum over k of C_k(n) equals phi(n) for every 2 <= n <= n_max."""
    return all(
        sum(counts_for_length(n).values()) == totient(n) for n in range(2, n_max + 1)
    )


@dataclass(frozen=True)
class BoundReport:
    """Outcome of the exhaustive order-k length bound checks."""

    order: int
    least_length_ok: bool  # length >= k + 2, equality exactly for constants
    nonconstant_floor_ok: bool  # non-constant implies >= 2k + 1
    floor_equality_ok: bool  # = 2k + 1 exactly on the class of a b^(k-1)
    greatest_length_ok: bool  # length <= F(k+1), equality exactly if alternating
    nonalternating_ceiling_ok: bool  # non-alternating implies <= F(k+1) - F(k-4)
    ceiling_equality_ok: bool  # equality exactly on the almost alternating class
    consecutive_lengths_ok: bool  # 3k-2, 3k-1 and 5k-8, 5k-7 all realized
    missing_floor_ok: bool  # number of missing lengths >= F(k-4) + k - 3

    @property
    def passed(self) -> bool:
        return all(
            (
                self.least_length_ok,
                self.nonconstant_floor_ok,
                self.floor_equality_ok,
                self.greatest_length_ok,
                self.nonalternating_ceiling_ok,
                self.ceiling_equality_ok,
                self.consecutive_lengths_ok,
                self.missing_floor_ok,
            )
        )


def bound_report(k: int, max_order: int = MAX_ENUMERATED_ORDER) -> BoundReport:
    """Check every length bound and equality class over all of order k >= 3."""
    if k < 3:
        raise ValueError("bound checks need order k >= 3")
    _check_order(k, max_order)

    lengths: dict[str, int] = {}
    for letters in itertools.product("ab", repeat=k):
        pa = pb = 1
        for x in letters:
            if x == "a":
                pb += pa
            else:
                pa += pb
        lengths["".join(letters)] = pa + pb

    lo, top = k + 2, fib(k + 1)
    ceiling = top - fib(k - 4)
    alternating_pair = {alternating(k, "a"), alternating(k, "b")}
    constants = {"a" * k, "b" * k}

    least_ok = all(n >= lo for n in lengths.values()) and (
        {v for v, n in lengths.items() if n == lo} == constants
    )
    floor = 2 * k + 1
    nonconstant_floor_ok = all(
        n >= floor for v, n in lengths.items() if v not in constants
    )
    floor_equality_ok = {v for v, n in lengths.items() if n == floor} == word_class(
        "a" + "b" * (k - 1)
    )
    greatest_ok = all(n <= top for n in lengths.values()) and (
        {v for v, n in lengths.items() if n == top} == alternating_pair
    )
    nonalternating_ceiling_ok = all(
        n <= ceiling for v, n in lengths.items() if v not in alternating_pair
    )
    ceiling_equality_ok = {v for v, n in lengths.items() if n == ceiling} == word_class(
        almost_alternating(k)
    )
    support = set(lengths.values())
    consecutive_ok = {3 * k - 2, 3 * k - 1, 5 * k - 8, 5 * k - 7} <= support
    missing = sum(1 for n in range(lo, top + 1) if n not in support)
    missing_floor_ok = missing >= fib(k - 4) + k - 3

    return BoundReport(
        k,
        least_ok,
        nonconstant_floor_ok,
        floor_equality_ok,
        greatest_ok,
        nonalternating_ceiling_ok,
        ceiling_equality_ok,
        consecutive_ok,
        missing_floor_ok,
    )


def _golden_convergents(digits: int = 40) -> tuple[Fraction, Fraction]:
    # adjacent Fibonacci quotients bracket the golden ratio; push until
    # the gap 1/(F_m F_{m+1}) is below 10^-digits
    bound = 10**digits
    prev, cur = 1, 1
    while prev * cur < bound:
        prev, cur = cur, prev + cur
    low, high = Fraction(cur, prev), Fraction(cur + prev, cur)
    if low > high:
        low, high = high, low
    return low, high


_GOLDEN_LOW, _GOLDEN_HIGH = _golden_convergents()


def max_count_lower_bound(k: int) -> Fraction:
    """Exact rational below 2^k / g^(k+3), g the golden ratio: a guaranteed
    lower bound for the maximal multiplicity of order k.

    Uses a 40-digit rational over-approximation of g so the returned
    value never exceeds the true bound; no floating point is involved.
    """
    if k < 1:
        raise ValueError("the bound is stated for k >= 1")
    return Fraction(2**k) / _GOLDEN_HIGH ** (k + 3)
