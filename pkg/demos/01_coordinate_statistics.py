#!/usr/bin/env python3
"""A tour of the coordinate statistics on ordered set partitions.

Every element of a partition sees the other blocks on its left and right,
through their openers (minima) and closers (maxima), each either smaller or
bigger.  That gives eight counts per element, plus the two "straddling"
counts lsb/rsb for blocks whose opener is below and closer above the
element.
"""
from opstat import OrderedSetPartition
from opstat.cli import render_stats_table
from opstat.statistics import stat, stat_restricted

pi = OrderedSetPartition.parse("6 8/5/1 4 7/3 9/2")
print(f"pi = {pi}\n")
print(render_stats_table(pi))

print("\nAggregates are row sums:")
for name in ("ros", "lcs", "lsb", "rsb"):
    print(f"  {name} = {stat(pi, name)}")

print("\nThe straddle counts decompose: lsb = los - lcs, rsb = ros - rcs")
print(f"  lsb = {stat(pi, 'lsb')} = {stat(pi, 'los')} - {stat(pi, 'lcs')}")
print(f"  rsb = {stat(pi, 'rsb')} = {stat(pi, 'ros')} - {stat(pi, 'rcs')}")

print("\nRestricting a statistic to openers/singletons (OS) or")
print("transients/closers (TC) splits the total:")
print(f"  ros_OS = {stat_restricted(pi, 'ros', 'OS')}, ros_TC = {stat_restricted(pi, 'ros', 'TC')}")
print(f"  rsb_OS = {stat_restricted(pi, 'rsb', 'OS')}, rsb_TC = {stat_restricted(pi, 'rsb', 'TC')}")

print("\nComposite statistics:")
for name in ("mak", "makp", "binv", "bmaj", "cinvlsb", "cmajlsb", "inv", "maj"):
    print(f"  {name:8} = {stat(pi, name)}")

print("\nThe partition analogue of the inversion number collapses three ways:")
print(f"  rsb_OS + bInv = {stat_restricted(pi, 'rsb', 'OS') + stat(pi, 'binv')}")
print(f"  ros_OS        = {stat_restricted(pi, 'ros', 'OS')}")
print(f"  inv(sigma)    = {stat(pi, 'invsigma')}  (sigma = {pi.standard_form()[1]})")
