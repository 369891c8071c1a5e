#!/usr/bin/env python3
"""Palindromic closure, the palindromization map, and its period pairs.

The map psi grows a palindrome letter by letter; the minimal periods of
the images follow a Fibonacci-style recurrence one can read off without
ever building the words.
"""

from diatomic import mu, pal_closure, period_pair, psi, psi_inverse, psi_prefix

print("closure steps for the directive 'aba':")
w = ""
for x in "aba":
    w = pal_closure(w + x)
    print(f"  after {x}: {w}")
print(f"psi('aba') = {psi('aba')}")
print()

v = "abaa"
pa, pb = period_pair(v)
print(f"psi({v}) = {psi(v)}  (p_a={pa}, p_b={pb}, length {pa + pb - 2})")
print(f"directive recovered: psi_inverse({psi(v)}) = {psi_inverse(psi(v))}")
print(f"psi_inverse('ab') = {psi_inverse('ab')}  (not a palindrome, hence not central)")
print()

# Justin's formula stitches images together through the marked morphisms
u, v = "ba", "aba"
lhs = psi(v + u)
rhs = mu(v, psi(u)) + psi(v)
print(f"psi(vu) = mu_v(psi(u)) psi(v) for v={v}, u={u}:")
print(f"  {lhs}")
print(f"  {rhs}")
print()

# the infinite directive (ab)(ab)(ab)... generates the Fibonacci word
print("Fibonacci word prefix:", psi_prefix("", "ab", 34))
