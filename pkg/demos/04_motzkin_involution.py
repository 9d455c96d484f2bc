#!/usr/bin/env python3
"""Unordered partitions as labelled Motzkin paths, and the involution that
swaps mak with rcb while preserving lcb.

Openers rise, closers fall, everything else stays level; a step's label is
one plus the number of still-open blocks to the left of the element's
block.  Reversing the path and transporting the fall labels along the
rise/fall pairing gives an involution on standard-form partitions.
"""
from opstat import OrderedSetPartition
from opstat.motzkin import lambda_map, motzkin_encode, motzkin_g
from opstat.statistics import stat

pi = OrderedSetPartition.parse("1 4 15/2 3/5 6/7 10 13/8/9 11/12 14")
d = motzkin_encode(pi)
print(f"pi = {pi}")
print(f"encoded: {''.join(d.steps)}")
print(f"labels : {','.join(map(str, d.labels))}\n")

g = motzkin_g(d)
print(f"reversed + transported: {''.join(g.steps)}")
print(f"labels                : {','.join(map(str, g.labels))}\n")

image = lambda_map(pi)
print(f"Lambda(pi) = {image}\n")

print(f"mak(pi)  = {stat(pi, 'mak'):>3}   rcb(Lambda(pi)) = {stat(image, 'rcb')}")
print(f"rcb(pi)  = {stat(pi, 'rcb'):>3}   mak(Lambda(pi)) = {stat(image, 'mak')}")
print(f"lcb(pi)  = {stat(pi, 'lcb'):>3}   lcb(Lambda(pi)) = {stat(image, 'lcb')}")
print(f"\nLambda(Lambda(pi)) == pi: {lambda_map(image) == pi}")
