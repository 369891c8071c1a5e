#!/usr/bin/env python3
"""The Raney (Calkin-Wilf) and Stern-Brocot labelings side by side.

Paths are words (a = left, b = right).  The Raney label of a path is the
period ratio of its central word; the Stern-Brocot label is the Raney
label of the reversed path and equals the slope of the Christoffel word.
"""

from itertools import product

from diatomic import christoffel_by_directive, nu, path_of_fraction, ra_of, raney, stern_brocot

print("first three levels (path: nu, Raney, Stern-Brocot):")
for depth in range(3):
    for letters in product("ab", repeat=depth):
        w = "".join(letters)
        print(f"  {w or 'eps':4}  nu={nu(w):2}  Ra={raney(w)}  Sb={stern_brocot(w)}")
print()

w = "abba"
print(f"node {w}: nu = {nu(w)}, Ra = {raney(w)} (= s(22)/s(23))")
print(f"ra_of(23) = {ra_of(23)}")
print()

print(f"slope of a psi(abaa) b       = {christoffel_by_directive('abaa').slope}")
print(f"Stern-Brocot label of 'abaa' = {stern_brocot('abaa')}")
print(f"Raney label of reversal      = {raney('aaba')}")
print()

print(f"where does 4/7 live?  raney path {path_of_fraction((4, 7), 'raney')}, "
      f"stern-brocot path {path_of_fraction((4, 7), 'sternbrocot')}")
