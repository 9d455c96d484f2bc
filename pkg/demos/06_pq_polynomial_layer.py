#!/usr/bin/env python3
"""The exact polynomial layer: q-integers, p,q-Stirling numbers, Eulerian
numbers, and the truncated-series identity that ties them together."""
from opstat.qpoly import (
    TruncatedSeries,
    carlitz_aq,
    gauss_binomial,
    pochhammer,
    pq_factorial,
    q_factorial,
    q_int,
    s_hat_pq,
    stirling_pq,
    verify_q_frobenius,
    verify_zezh,
)

print("q-integers and factorials:")
print(f"  [4]_q   = {q_int(4)}")
print(f"  [3]_q!  = {q_factorial(3)}")
print(f"  [3]_pq! = {pq_factorial(3)}\n")

print("p,q-Stirling triangle (n <= 4):")
for n in range(5):
    for k in range(n + 1):
        poly = stirling_pq(n, k)
        if not poly.is_zero():
            print(f"  S_pq({n},{k}) = {poly}")
print()

print("The Laurent variant lives in negative powers of p:")
for n, k in [(2, 1), (3, 1), (3, 2)]:
    print(f"  S_hat({n},{k}) = {s_hat_pq(n, k)}")
print()

print("Carlitz q-Eulerian numbers (n = 4):")
for k in range(4):
    print(f"  A_q(4,{k}) = {carlitz_aq(4, k)}")
print()

n, k = 6, 3
ok, lhs, rhs = verify_zezh(n, k)
print(f"[{k}]_q! S_q({n},{k}) as a Eulerian/Gaussian sum: {ok}")
print(f"  both sides = {lhs.to_text()[:64]}...\n")

print("Truncated series: 1/(x;q)_3 up to x^4")
inv = TruncatedSeries(pochhammer(3), 4).inverse()
print(f"  {inv.poly.to_text()}\n")

print(f"q-Frobenius identity to order x^6, n=4: {verify_q_frobenius(4, 6)}")
print(f"Gaussian binomial [5 2]_q = {gauss_binomial(5, 2)}")
