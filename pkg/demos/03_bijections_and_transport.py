#!/usr/bin/env python3
"""The bijections built from the path encodings and what they carry.

* xi   : involution; swaps the statistics mak+bInv and mak'+bInv, fixes
         cinvLSB.
* upsilon : carries the bInv-based statistic triple to the bMaj-based one
         while preserving the partition type.
* theta: involution; complements the type, preserves MAJ.
* gamma_sigma : moves a standard-form partition into the sigma-class with
         the same type and the same (cls, opb, sb).
"""
from opstat import OrderedSetPartition, Permutation
from opstat.paths import gamma_sigma, theta_map, upsilon, xi_map
from opstat.statistics import six_composites, stat

pi = OrderedSetPartition.parse("6/3 5 7/1 4 10/9/2 8")


def triple_inv(p):
    a, b, ci, *_ = six_composites(p)
    return a, b, ci


def triple_maj(p):
    *_, c, d, cm = six_composites(p)
    return c, d, cm


print(f"pi = {pi}")
print(f"  (mak+bInv, mak'+bInv, cinvLSB) = {triple_inv(pi)}")
print(f"  (mak+bMaj, mak'+bMaj, cmajLSB) = {triple_maj(pi)}\n")

image = xi_map(pi)
print(f"xi(pi) = {image}")
print(f"  inv triple {triple_inv(image)}  <- first two swapped, third fixed")
print(f"  xi(xi(pi)) == pi: {xi_map(image) == pi}\n")

image = upsilon(pi)
print(f"upsilon(pi) = {image}")
print(f"  its maj triple {triple_maj(image)} equals pi's inv triple {triple_inv(pi)}")
print(f"  type preserved: {image.partition_type() == pi.partition_type()}\n")

rho = OrderedSetPartition.parse("6/3 5 7/9/1 4 10/2 8")
image = theta_map(rho)
print(f"theta({rho}) = {image}")
print(f"  MAJ preserved: {stat(image, 'maj')} == {stat(rho, 'maj')}")
print(f"  type complemented: {image.partition_type() == rho.partition_type().complement()}\n")

std = OrderedSetPartition.parse("1 5 7/2 4 10/3 8/6/9")
sigma = Permutation.parse("43152")
image = gamma_sigma(std, sigma)
print(f"gamma_{sigma.one_line().replace(' ', '')}({std}) = {image}")
print(f"  lands in the sigma-class: {image.standard_form()[1] == sigma}")
print(f"  type preserved: {image.partition_type() == std.partition_type()}")
print(
    "  (cls, opb, sb) preserved: "
    f"{tuple(stat(image, s) for s in ('cls', 'opb', 'sb'))} == "
    f"{tuple(stat(std, s) for s in ('cls', 'opb', 'sb'))}"
)
