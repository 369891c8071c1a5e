"""Replay of the package's cross-route identities as named checks.

Every check compares two independently computed quantities (or a
computed quantity against a frozen published table) over an exhaustive
range controlled by ``max_k`` (word lengths / orders) and ``max_n``
(integer arguments).  The checks are deliberately redundant with the
unit tests: they are the runnable summary behind the ``verify`` CLI
command.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple

from .christoffel import christoffel_by_slope, directive_of, lyndon_factorization
from .continuants import christoffel_length_cf, fib, mirror_formula
from .distribution import (
    bound_report,
    counts_for_length,
    histogram,
    summarize_histogram,
    totient,
)
from .fracs import frac
from .palindromes import min_period_central, mu, period_pair, psi, psi_inverse, psi_prefix
from .stern import (
    delta_expansion,
    factor_decomposition,
    initial_subword_count,
    length_by_subword_count,
    marked_occurrences,
    reverse_bits,
    ruler,
    stern,
    stern_factor_identity,
    stern_via_christoffel,
    stern_via_integral_continuant,
    stern_via_subwords,
    stern_via_zeta,
    zeta,
)
from .trees import nu, path_of_fraction, ra_of, raney, stern_brocot
from .words import complement, decode, encode

STERN_PREFIX = (
    0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4,
    1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7, 4, 5, 1,
)

#: Published maxima of C_k and the lengths attaining them; the length
#: lists are treated as containment pins (they may not be exhaustive).
MAX_COUNT_TABLE = {
    1: (2, [3]),
    2: (2, [4, 5]),
    3: (4, [7]),
    4: (4, [9, 11]),
    5: (4, [11, 13, 14, 17, 18, 19]),
    6: (8, [23]),
    7: (12, [41]),
    8: (12, [43]),
    9: (16, [71, 73, 83]),
    10: (24, [113]),
    11: (28, [227]),
    12: (36, [199, 283]),
    13: (48, [449]),
    14: (64, [433]),
    15: (72, [839]),
    16: (102, [1433]),
    17: (124, [1997]),
    18: (160, [1987]),
    19: (212, [3361]),
    20: (256, [5557]),
    21: (332, [8689]),
    22: (444, [8507]),
}

#: Published number of missing lengths for orders 1..20.
MISSING_COUNT_TABLE = (
    0, 0, 1, 2, 5, 11, 18, 29, 51, 74,
    119, 195, 323, 498, 828, 1361, 2289, 3801, 6305, 10560,
)


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str


def _words_up_to(k: int) -> Iterator[str]:
    for m in range(k + 1):
        for letters in itertools.product("ab", repeat=m):
            yield "".join(letters)


def check_stern_prefix(max_k: int, max_n: int) -> CheckResult:
    ok = tuple(stern(n) for n in range(33)) == STERN_PREFIX
    return CheckResult("stern-prefix-values", ok, "first 33 values")


def check_stern_evaluators(max_k: int, max_n: int) -> CheckResult:
    bad = [
        n
        for n in range(max_n + 1)
        if not stern(n) == stern_via_christoffel(n) == stern_via_subwords(n)
    ]
    zeta_limit = min(max_n, 2048)
    bad += [n for n in range(2, zeta_limit + 1) if stern(n) != stern_via_zeta(n)]
    detail = f"recurrence = words = subwords on 0..{max_n}, = continuant on 2..{zeta_limit}"
    return CheckResult("stern-evaluator-agreement", not bad, detail)


def check_odd_even_correspondence(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 12)
    ok = True
    for w in _words_up_to(k):
        pa, pb = period_pair(w)
        if stern(encode("b" + w + "b")) != pa + pb:
            ok = False
            break
        if stern(encode("b" + w + "b") + 1) != min_period_central(w + "b"):
            ok = False
            break
    return CheckResult(
        "odd-length-even-period", ok, f"s at <bwb>, <bwb>+1 for |w| <= {k}"
    )


def check_palindromization_composition(max_k: int, max_n: int) -> CheckResult:
    bound = min(max_k, 10)
    ok = all(
        psi(v + u) == mu(v, psi(u)) + psi(v)
        for m in range(bound + 1)
        for split in range(m + 1)
        for v in ("".join(t) for t in itertools.product("ab", repeat=split))
        for u in ("".join(t) for t in itertools.product("ab", repeat=m - split))
    )
    return CheckResult(
        "palindromization-composition", ok, f"psi(vu) = mu_v(psi(u)) psi(v), |vu| <= {bound}"
    )


def check_directive_roundtrip(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 12)
    ok = all(psi_inverse(psi(v)) == v for v in _words_up_to(k))
    limit = min(max_n, 200)
    for p in range(limit + 1):
        for q in range(limit + 1 - p):
            if p + q < 2 or frac(p, q) != (p, q) or p * q == 0:
                continue
            cw = christoffel_by_slope(p, q)
            if directive_of(cw.word) != cw.directive:
                ok = False
    return CheckResult(
        "directive-roundtrips", ok, f"psi and slope inversions, |v| <= {k}, p+q <= {limit}"
    )


def check_factorization(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 10)
    ok = True
    for v in _words_up_to(k):
        cw = christoffel_by_slope(*stern_brocot(v))
        w1, w2 = lyndon_factorization(cw)
        n = len(cw.word)
        p, q = cw.slope
        if w1.word + w2.word != cw.word or not w1.word < w2.word:
            ok = False
            break
        if (len(w1.word) * p) % n != 1 or (len(w2.word) * q) % n != 1:
            ok = False
            break
    return CheckResult(
        "lyndon-factorization", ok, f"split, order, modular inverses for |v| <= {k}"
    )


def check_occurrence_markers(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 10)
    ok = all(marked_occurrences(w)[0] == psi(w) + "ba" for w in _words_up_to(k))
    return CheckResult(
        "occurrence-markers", ok, f"sorted markers spell psi(w)ba for |w| <= {k}"
    )


def check_subword_counts(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 12)
    ok = True
    for v in _words_up_to(k):
        pa, pb = period_pair(v)
        if length_by_subword_count(v) != pa + pb:
            ok = False
            break
        if initial_subword_count(v) != ("a" + psi(v) + "b").count("a"):
            ok = False
            break
    return CheckResult(
        "pattern-subword-counts", ok, f"length and letter counts for |v| <= {k}"
    )


def check_factor_decomposition(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 12)
    ok = all(factor_decomposition(w).total == sum(period_pair(w)) for w in _words_up_to(k))
    ok = ok and all(stern_factor_identity(n) for n in range(min(max_n, 512) + 1))
    return CheckResult(
        "weighted-factor-decomposition", ok, f"totals equal lengths for |w| <= {k}"
    )


def check_tree_duality(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 12)
    ok = True
    for w in _words_up_to(k):
        ra = raney(w)
        if stern_brocot(w) != raney(w[::-1]) or raney(complement(w)) != ra.inverse:
            ok = False
            break
        if path_of_fraction(ra, "raney") != w:
            ok = False
            break
    return CheckResult(
        "tree-duality", ok, f"reversal, complement inversion, path inverse for |w| <= {k}"
    )


def check_mirror_formula(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 12)
    ok = all(mirror_formula(v) == (stern_brocot(v), raney(v)) for v in _words_up_to(k))
    return CheckResult(
        "mirror-formula", ok, f"continued fractions match tree labels for |v| <= {k}"
    )


def check_continuant_length(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 14)
    ok = True
    for v in _words_up_to(k):
        pa, pb = period_pair(v)
        if christoffel_length_cf(v) != (pa + pb, min_period_central(v)):
            ok = False
            break
    return CheckResult(
        "continuant-length-period", ok, f"continuant route for |v| <= {k}"
    )


def check_ra_numbering(max_k: int, max_n: int) -> CheckResult:
    limit = min(max_n, 4096)
    ok = all(ra_of(n) == (stern(n - 1), stern(n)) for n in range(2, limit + 1))
    return CheckResult(
        "tree-numbering-stern", ok, f"ra(n) = s(n-1)/s(n) for n <= {limit}"
    )


def check_stern_identities(max_k: int, max_n: int) -> CheckResult:
    limit = min(max_n, 4096)
    ok = all(stern(n) == stern(reverse_bits(n)) for n in range(limit + 1))
    for k in range(min(max_k, 12) + 1):
        ok = ok and all(
            stern(2**k + p) == stern(2 ** (k + 1) - p) for p in range(1, 2**k + 1)
        )
    ok = ok and all(
        stern(n - 1) // stern(n) == ruler(n) for n in range(1, limit + 1)
    )
    ok = ok and all(
        Fraction(stern(n), stern(n + 1))
        == 1 / (2 * ruler(n) + 1 - Fraction(stern(n - 1), stern(n)))
        for n in range(1, limit + 1)
    )
    ok = ok and all(delta_expansion(n).total == stern(2 * n - 1) for n in range(2, limit + 1))
    for k in range(3, min(max_k, 13) + 1):
        for p in range(2 ** (k - 3)):
            ok = ok and stern(2**k + 8 * p + 1) < stern(2**k + 8 * p + 3)
            ok = ok and stern(2**k + 8 * p + 5) > stern(2**k + 8 * p + 7)
    return CheckResult(
        "stern-identities", ok, f"bit reversal, symmetry, quotient steps for n <= {limit}"
    )


def check_integral_continuant(max_k: int, max_n: int) -> CheckResult:
    k = min(max_k, 12)
    ok = all(stern_via_integral_continuant(w) == stern(nu(w)) for w in _words_up_to(k))
    return CheckResult(
        "integral-continuant-stern", ok, f"s(nu(w)) continuant for |w| <= {k}"
    )


def check_histograms(max_k: int, max_n: int) -> CheckResult:
    top = min(max_k, 22)
    ok = True
    for k in range(top + 1):
        h = histogram(k)
        if h.mass != 2**k or h.weighted_mass != 2 * 3**k:
            ok = False
            break
        support = h.support
        if support and (support[0] < k + 2 or support[-1] > fib(k + 1)):
            ok = False
            break
    return CheckResult(
        "histogram-invariants", ok, f"mass 2^k, weighted mass 2*3^k for k <= {top}"
    )


def check_tables(max_k: int, max_n: int) -> CheckResult:
    # the published rows reach order 22; raising --max-k past 14 turns on
    # the slow tail (order k enumerates 2^k directives)
    top = min(max_k, 22)
    ok = True
    for k in range(1, top + 1):
        s = summarize_histogram(histogram(k))
        expected_max, listed = MAX_COUNT_TABLE[k]
        if s.max_count != expected_max or not set(listed) <= set(s.argmax):
            ok = False
            break
        if k <= len(MISSING_COUNT_TABLE) and s.missing_count != MISSING_COUNT_TABLE[k - 1]:
            ok = False
            break
    return CheckResult(
        "published-table-pins", ok, f"max counts and missing lengths for k <= {top}"
    )


def check_bounds(max_k: int, max_n: int) -> CheckResult:
    top = min(max_k, 14)
    ok = all(bound_report(k).passed for k in range(3, top + 1))
    return CheckResult("length-bounds", ok, f"extremal classes for 3 <= k <= {top}")


def check_totient(max_k: int, max_n: int) -> CheckResult:
    limit = min(max_n, 300)
    ok = all(
        sum(counts_for_length(n).values()) == totient(n) for n in range(2, limit + 1)
    )
    return CheckResult("totient-identity", ok, f"order sums equal phi(n) for n <= {limit}")


def check_fibonacci_word(max_k: int, max_n: int) -> CheckResult:
    target = psi("ab" * 6)
    ok = psi_prefix("", "ab", len(target)) == target
    ok = ok and target.startswith("abaababaabaab")
    return CheckResult("fibonacci-word-prefix", ok, "periodic directive limit")


def check_alternating_numbers(max_k: int, max_n: int) -> CheckResult:
    top = min(max_k, 16)
    ok = True
    for k in range(1, top + 1):
        u = ("ab" * k)[: k - 1]
        if encode("b" + u + "b") != (2 ** (k + 2) + (-1) ** (k + 1)) // 3:
            ok = False
            break
        if sum(period_pair(("ab" * k)[:k])) != fib(k + 1):
            ok = False
            break
    return CheckResult(
        "alternating-directives", ok, f"tree numbers and Fibonacci lengths for k <= {top}"
    )


ALL_CHECKS: list[Callable[[int, int], CheckResult]] = [
    check_stern_prefix,
    check_stern_evaluators,
    check_odd_even_correspondence,
    check_palindromization_composition,
    check_directive_roundtrip,
    check_factorization,
    check_occurrence_markers,
    check_subword_counts,
    check_factor_decomposition,
    check_tree_duality,
    check_mirror_formula,
    check_continuant_length,
    check_ra_numbering,
    check_stern_identities,
    check_integral_continuant,
    check_histograms,
    check_tables,
    check_bounds,
    check_totient,
    check_fibonacci_word,
    check_alternating_numbers,
]


def run_checks(max_k: int = 10, max_n: int = 1024) -> list[CheckResult]:
    """Run the whole suite with the given exhaustive bounds."""
    return [check(max_k, max_n) for check in ALL_CHECKS]
