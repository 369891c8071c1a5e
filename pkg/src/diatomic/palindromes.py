"""Right palindromic closure and the iterated palindromization map.

The map sends a directive word v = x1 x2 ... xn to the palindrome
obtained by starting from the empty word and alternately appending the
next directive letter and closing to the shortest palindrome with that
prefix.  Its images are exactly the central words: the palindromic
prefixes of characteristic Sturmian words, or equivalently the words
with two coprime periods p, q and length p + q - 2.
"""

from __future__ import annotations

from .words import BudgetError, complement, is_palindrome

#: Default ceiling (in letters) for materialized palindromization images.
#: Image length is Fibonacci-like in the directive length, so this guards
#: against accidental memory exhaustion, not against honest large runs.
PSI_LENGTH_BUDGET = 2**30


def pal_closure(w: str) -> str:
    """Shortest palindrome having ``w`` as a prefix.

    Writing w = uQ with Q the longest palindromic suffix of w, the
    closure is u Q reverse(u).

    >>> pal_closure("abaa")
    'abaaba'
    """
    for i in range(len(w)):
        if is_palindrome(w[i:]):
            return w + w[:i][::-1]
    return w  # empty word


def period_pair(v: str) -> tuple[int, int]:
    """The pair (p_a, p_b) of periods attached to a directive word.

    p_x(v) is the length of mu_v(x) (see :func:`mu`); the two values are
    coprime, their sum is len(psi(v)) + 2, and each is computed by the
    O(len(v)) recurrence that appending a letter x keeps p_x and adds it
    to the other component.  The values grow like Fibonacci numbers, so
    plain unbounded integers are required.

    >>> period_pair("abaa")
    (3, 8)
    """
    pa = pb = 1
    for x in v:
        if x == "a":
            pb += pa
        else:
            pa += pb
    return pa, pb


def psi(v: str, max_length: int | None = PSI_LENGTH_BUDGET) -> str:
    """Iterated palindromic closure of the directive word ``v``.

    Each step extends the current palindrome by exactly its new minimal
    period, so the whole image is built in time linear in its length
    instead of rescanning for palindromic suffixes.  When the predicted
    image length exceeds ``max_length`` a :class:`BudgetError` is raised
    before any letters are produced.

    >>> psi("aba")
    'abaaba'
    """
    if max_length is not None:
        pa, pb = period_pair(v)
        if pa + pb - 2 > max_length:
            raise BudgetError(
                f"palindromization image has {pa + pb - 2} letters, "
                f"budget is {max_length}"
            )
    w: list[str] = []
    pa = pb = 1
    for x in v:
        p = pa if x == "a" else pb
        n = len(w)
        if p == n + 1:
            # x has not occurred yet: the closure is w x w
            w = w + [x] + w
        else:
            # new letters repeat with the fresh minimal period p
            w.extend(w[n - p : n])
        if x == "a":
            pb += pa
        else:
            pa += pb
    return "".join(w)


def psi_prefix(preperiod: str, period: str, n: int) -> str:
    """Length-``n`` prefix of the palindromization of the infinite
    directive word ``preperiod . period . period ...``.

    With empty preperiod and period ``ab`` this produces prefixes of the
    Fibonacci word abaababaabaab...
    """
    if n < 0:
        raise ValueError("prefix length must be non-negative")
    if not period:
        raise ValueError("period word must be non-empty")
    w: list[str] = []
    pa = pb = 1
    i = 0
    while len(w) < n:
        x = preperiod[i] if i < len(preperiod) else period[(i - len(preperiod)) % len(period)]
        i += 1
        p = pa if x == "a" else pb
        if p == len(w) + 1:
            w = w + [x] + w
        else:
            w.extend(w[len(w) - p : len(w)])
        if x == "a":
            pb += pa
        else:
            pa += pb
    return "".join(w[:n])


def psi_inverse(w: str) -> str | None:
    """Directive word of a central word, or None when ``w`` is not central.

    Every palindromic prefix of a central word is itself the image of a
    directive prefix, so the directive is read off letter by letter: each
    directive letter is the letter of ``w`` right after the current
    palindromic prefix, whose successor length follows from the period
    recurrence.  A final rebuild-and-compare rejects non-central input.

    >>> psi_inverse("abaaba")
    'aba'
    """
    directive: list[str] = []
    pa = pb = 1
    pos = 0
    while pos < len(w):
        x = w[pos]
        directive.append(x)
        if x == "a":
            pos += pa
            pb += pa
        else:
            pos += pb
            pa += pb
    if pos != len(w):
        return None
    v = "".join(directive)
    return v if psi(v, max_length=None) == w else None


def mu(v: str, w: str) -> str:
    """Image of ``w`` under the morphism composition mu_x1 o ... o mu_xn
    for v = x1 ... xn, where mu_x fixes x and sends the other letter y
    to xy.  The empty directive acts as the identity.

    >>> mu("a", "b")
    'ab'
    """
    out = w
    for x in reversed(v):
        y = complement(x)
        out = out.replace(y, x + y)
    return out


def min_period_central(v: str) -> int:
    """Minimal period of psi(v), computed without building the image.

    For non-empty v it equals the period component of the last letter of
    v, which is also min(p_a, p_b); for the empty directive it is 1.
    """
    if not v:
        return 1
    pa, pb = period_pair(v)
    return pa if v[-1] == "a" else pb
