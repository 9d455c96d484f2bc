"""Coordinate, block and composite statistics on ordered set partitions.

The ten coordinate statistics classify, for each element i, every other
block by side (left/right of i's block), by the kind of element compared
(opener/closer) and by size (smaller/bigger than i).  The name encodes the
combination: e.g. ``ros`` counts blocks to the *right* whose *opener* is
*smaller*, ``lcb`` blocks to the *left* whose *closer* is *bigger*.  All
aggregate statistics are sums of coordinate values over the elements.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .core import OrderedSetPartition, Trace

__all__ = [
    "CoordStats",
    "COORD_NAMES",
    "STAT_NAMES",
    "coord_stats",
    "coordinate_table",
    "stat",
    "stat_restricted",
    "block_relation",
    "binv",
    "bdes_set",
    "bmaj",
    "trace_rsb",
    "trace_ros",
    "composite",
    "six_composites",
    "aggregate_profile",
    "resolve_stat",
]

COORD_NAMES = ("los", "ros", "lob", "rob", "lcs", "rcs", "lcb", "rcb", "lsb", "rsb")


@dataclass(frozen=True)
class CoordStats:
    los: int
    ros: int
    lob: int
    rob: int
    lcs: int
    rcs: int
    lcb: int
    rcb: int
    lsb: int
    rsb: int

    def as_dict(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in COORD_NAMES}


def coord_stats(pi: OrderedSetPartition, i: int) -> CoordStats:
    """The ten coordinate statistics of element i.

    Every block contributes through its opener (minimum) and closer
    (maximum), so the counts reduce to block-level comparisons.
    """
    if not 1 <= i <= pi.n:
        raise ValueError(f"element {i} outside 1..{pi.n}")
    pos_i = pi.block_index[i]
    los = ros = lob = rob = lcs = rcs = lcb = rcb = lsb = rsb = 0
    for pos, block in enumerate(pi.blocks, start=1):
        if pos == pos_i:
            continue
        opener, closer = block[0], block[-1]
        left = pos < pos_i
        if opener < i:
            if left:
                los += 1
            else:
                ros += 1
        else:
            if left:
                lob += 1
            else:
                rob += 1
        if closer < i:
            if left:
                lcs += 1
            else:
                rcs += 1
        else:
            if left:
                lcb += 1
            else:
                rcb += 1
        if opener < i < closer:
            if left:
                lsb += 1
            else:
                rsb += 1
    return CoordStats(los, ros, lob, rob, lcs, rcs, lcb, rcb, lsb, rsb)


def coordinate_table(pi: OrderedSetPartition) -> dict[str, list[int]]:
    """Rows of per-element coordinate values, elements taken in block order
    (the order they appear in the written partition)."""
    rows: dict[str, list[int]] = {name: [] for name in COORD_NAMES}
    for block in pi.blocks:
        for el in block:
            values = coord_stats(pi, el).as_dict()
            for name in COORD_NAMES:
                rows[name].append(values[name])
    return rows


# ---------------------------------------------------------------------------
# Block statistics (shared by partitions and traces)
# ---------------------------------------------------------------------------

PartitionLike = Union[OrderedSetPartition, Trace]


def _block_bounds(obj: PartitionLike) -> list[tuple[int, float]]:
    """(opener, effective closer) per block; an active trace block closes at
    +infinity."""
    if isinstance(obj, Trace):
        return [
            (block[0], math.inf if flag else block[-1])
            for block, flag in zip(obj.blocks, obj.active)
        ]
    return [(block[0], block[-1]) for block in obj.blocks]


def block_relation(pi: PartitionLike, i: int, j: int) -> bool:
    """Whether block i dominates block j: min(B_i) > max(B_j)."""
    bounds = _block_bounds(pi)
    if not (1 <= i <= len(bounds) and 1 <= j <= len(bounds)):
        raise ValueError("block index out of range")
    return bounds[i - 1][0] > bounds[j - 1][1]


def binv(pi: PartitionLike) -> int:
    """Number of pairs i < j with block i dominating block j."""
    bounds = _block_bounds(pi)
    return sum(
        1
        for a in range(len(bounds))
        for b in range(a + 1, len(bounds))
        if bounds[a][0] > bounds[b][1]
    )


def bdes_set(pi: PartitionLike) -> set[int]:
    """Positions i with block i dominating block i+1."""
    bounds = _block_bounds(pi)
    return {a + 1 for a in range(len(bounds) - 1) if bounds[a][0] > bounds[a + 1][1]}


def bmaj(pi: PartitionLike) -> int:
    return sum(bdes_set(pi))


def trace_rsb(t: Trace, i: int) -> int:
    """Active blocks strictly right of i's block whose opener is below i."""
    pos = t.block_index(i)
    return sum(
        1
        for j in range(pos, t.k)
        if t.active[j] and t.blocks[j][0] < i
    )


def trace_ros(t: Trace, i: int) -> int:
    """Blocks strictly right of the block containing i."""
    return t.k - t.block_index(i)


# ---------------------------------------------------------------------------
# Aggregates, restrictions and composite statistics
# ---------------------------------------------------------------------------

def _aggregate(pi: OrderedSetPartition, name: str) -> int:
    return sum(getattr(coord_stats(pi, i), name) for i in range(1, pi.n + 1))


def stat_restricted(pi: OrderedSetPartition, name: str, cls: str) -> int:
    """Restrict a coordinate-sum statistic to the opener/singleton elements
    ("OS") or to the transient/closer elements ("TC")."""
    if name not in COORD_NAMES:
        raise ValueError(f"not a coordinate statistic: {name}")
    lam = pi.partition_type()
    if cls.upper() == "OS":
        domain = lam.openers | lam.singletons
    elif cls.upper() == "TC":
        domain = lam.transients | lam.closers
    else:
        raise ValueError(f"restriction class must be OS or TC, got {cls!r}")
    return sum(getattr(coord_stats(pi, i), name) for i in sorted(domain))


def _mak(pi):
    return _aggregate(pi, "ros") + _aggregate(pi, "lcs")


def _makp(pi):
    return _aggregate(pi, "lob") + _aggregate(pi, "rcb")


def _cbinv(pi):
    return math.comb(pi.k, 2) - binv(pi)


def _cbmaj(pi):
    return math.comb(pi.k, 2) - bmaj(pi)


def _cinv_lsb(pi):
    return _aggregate(pi, "lsb") + _cbinv(pi) + math.comb(pi.k, 2)


def _cmaj_lsb(pi):
    return _aggregate(pi, "lsb") + _cbmaj(pi) + math.comb(pi.k, 2)


def _inv_upper(pi):
    return stat_restricted(pi, "rsb", "OS") + binv(pi)


def _maj_upper(pi):
    return stat_restricted(pi, "rsb", "OS") + bmaj(pi)


def _cls(pi):
    return _aggregate(pi, "lcs") + _aggregate(pi, "rcs")


def _opb(pi):
    return _aggregate(pi, "lob") + _aggregate(pi, "rob")


def _sb(pi):
    return _aggregate(pi, "lsb") + _aggregate(pi, "rsb")


def _inv_sigma(pi):
    return pi.standard_form()[1].inversion_number()


def _maj_sigma(pi):
    return pi.standard_form()[1].major_index()


_COMPOSITES: dict[str, Callable[[OrderedSetPartition], int]] = {
    "binv": binv,
    "bmaj": bmaj,
    "bdes": lambda pi: len(bdes_set(pi)),
    "cbinv": _cbinv,
    "cbmaj": _cbmaj,
    "mak": _mak,
    "makp": _makp,
    "mak'": _makp,
    "cinvlsb": _cinv_lsb,
    "cmajlsb": _cmaj_lsb,
    "inv": _inv_upper,
    "maj": _maj_upper,
    "cls": _cls,
    "opb": _opb,
    "sb": _sb,
    "invsigma": _inv_sigma,
    "majsigma": _maj_sigma,
}

STAT_NAMES = tuple(COORD_NAMES) + tuple(sorted(set(_COMPOSITES) - {"mak'"}))


def resolve_stat(name: str) -> Callable[[OrderedSetPartition], int]:
    """Look up a statistic evaluator by name, case-insensitively.

    "INV"/"MAJ" (and any case variant of inv/maj) mean the partition
    statistics rsb_OS + bInv and rsb_OS + bMaj; the permutation-derived
    statistics inv(sigma)/maj(sigma) are addressed as "invsigma"/"majsigma".
    The exact spellings "Inv" and "Maj" are kept for the latter pair.
    """
    if name in ("Inv", "Maj"):
        return _COMPOSITES["invsigma" if name == "Inv" else "majsigma"]
    low = name.lower()
    if low in COORD_NAMES:
        return lambda pi, _n=low: _aggregate(pi, _n)
    if low in _COMPOSITES:
        return _COMPOSITES[low]
    if low.endswith(("_os", "_tc")) and low[:-3] in COORD_NAMES:
        return lambda pi, _n=low[:-3], _c=low[-2:]: stat_restricted(pi, _n, _c)
    raise ValueError(f"unknown statistic: {name!r}")


def stat(pi: OrderedSetPartition, name: str) -> int:
    """Evaluate a named statistic; coordinate names are summed over all
    elements, e.g. stat(pi, "ros") = ros_1 + ... + ros_n."""
    return resolve_stat(name)(pi)


def composite(pi: OrderedSetPartition, name: str) -> int:
    """Evaluate one of the composed statistics (mak, makp, cinvlsb, ...)."""
    if name in ("Inv", "Maj"):
        return resolve_stat(name)(pi)
    low = name.lower()
    if low not in _COMPOSITES:
        raise ValueError(f"unknown composite statistic: {name!r}")
    return _COMPOSITES[low](pi)


def aggregate_profile(pi: OrderedSetPartition) -> dict[str, int]:
    """All ten coordinate sums, the ros/rcs/rsb restrictions to the
    opener-or-singleton and transient-or-closer classes, and the block
    statistics, computed in a single pass over elements and blocks.

    Matches the one-statistic evaluators; the test suite compares the two
    routes exhaustively at small n.
    """
    blocks = pi.blocks
    bounds = [(b[0], b[-1]) for b in blocks]
    pos_of = pi.block_index
    out = dict.fromkeys(COORD_NAMES, 0)
    out["ros_os"] = out["rcs_os"] = out["rsb_os"] = out["rsb_tc"] = 0
    for i in range(1, pi.n + 1):
        pos_i = pos_of[i]
        opener_like = blocks[pos_i - 1][0] == i
        ros_i = rcs_i = rsb_i = 0
        for pos, (opener, closer) in enumerate(bounds, start=1):
            if pos == pos_i:
                continue
            left = pos < pos_i
            if opener < i:
                out["los" if left else "ros"] += 1
                if not left:
                    ros_i += 1
            else:
                out["lob" if left else "rob"] += 1
            if closer < i:
                out["lcs" if left else "rcs"] += 1
                if not left:
                    rcs_i += 1
            else:
                out["lcb" if left else "rcb"] += 1
            if opener < i < closer:
                out["lsb" if left else "rsb"] += 1
                if not left:
                    rsb_i += 1
        if opener_like:
            out["ros_os"] += ros_i
            out["rcs_os"] += rcs_i
            out["rsb_os"] += rsb_i
        else:
            out["rsb_tc"] += rsb_i
    out["binv"] = binv(pi)
    out["bmaj"] = bmaj(pi)
    out["cls"] = out["lcs"] + out["rcs"]
    out["opb"] = out["lob"] + out["rob"]
    out["sb"] = out["lsb"] + out["rsb"]
    out["inv"] = out["rsb_os"] + out["binv"]
    out["maj"] = out["rsb_os"] + out["bmaj"]
    return out


def six_composites(pi: OrderedSetPartition) -> tuple[int, int, int, int, int, int]:
    """(mak+bInv, makp+bInv, cinvLSB, mak+bMaj, makp+bMaj, cmajLSB) computed
    in one pass straight from the coordinate definitions.

    This is the hot path of the exhaustive equidistribution checks; it is
    compared element-by-element against the one-statistic evaluators in the
    test suite.
    """
    blocks = pi.blocks
    k = len(blocks)
    bounds = [(b[0], b[-1]) for b in blocks]
    pos_of = pi.block_index
    ros = lcs = lob = rcb = lsb = 0
    for i in range(1, pi.n + 1):
        pos_i = pos_of[i]
        for pos, (opener, closer) in enumerate(bounds, start=1):
            if pos == pos_i:
                continue
            if pos < pos_i:
                if closer < i:
                    lcs += 1
                if opener > i:
                    lob += 1
                elif closer > i:
                    lsb += 1
            else:
                if opener < i:
                    ros += 1
                if closer > i:
                    rcb += 1
    b_inv = sum(
        1 for a in range(k) for b in range(a + 1, k) if bounds[a][0] > bounds[b][1]
    )
    b_maj = sum(a + 1 for a in range(k - 1) if bounds[a][0] > bounds[a + 1][1])
    choose2 = k * (k - 1) // 2
    mak = ros + lcs
    makp = lob + rcb
    return (
        mak + b_inv,
        makp + b_inv,
        lsb + (choose2 - b_inv) + choose2,
        mak + b_maj,
        makp + b_maj,
        lsb + (choose2 - b_maj) + choose2,
    )
