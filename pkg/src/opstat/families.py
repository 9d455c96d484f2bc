"""Exhaustive generators for the families the distribution identities sum
over, plus the rearrangement bijection ``beta`` driven by subdiagonal
integer vectors.

Generators stream in a fixed deterministic order so that any failure report
is reproducible.  Ordered-partition families refuse n above a desk-scale
limit (default 12, overridable through the environment variable
``OPSTAT_MAX_N`` or an explicit flag): the family sizes grow like k! times
the Stirling numbers and nothing past desk scale is exhaustively checkable.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cache
from math import factorial
from typing import Iterator, Sequence

from .core import OrderedSetPartition, PartitionType, Permutation
from .paths import LatticePath, PathDiagram, _insertion_positions, psi_inv

__all__ = [
    "DeskScaleError",
    "FamilySpec",
    "generate",
    "set_partitions",
    "ordered_set_partitions",
    "sigma_partitions",
    "partitions_of_type",
    "rearrangements",
    "permutations",
    "words",
    "path_diagrams",
    "compositions",
    "subdiagonal_vectors",
    "stirling2",
    "fubini",
    "beta",
    "beta_inv",
    "desk_scale_limit",
]

DESK_SCALE_DEFAULT = 12


class DeskScaleError(ValueError):
    """Raised when an exhaustive family is requested beyond desk scale."""


def desk_scale_limit() -> int:
    return int(os.environ.get("OPSTAT_MAX_N", DESK_SCALE_DEFAULT))


def _check_scale(n: int, allow_large: bool) -> None:
    limit = desk_scale_limit()
    if n > limit and not allow_large:
        raise DeskScaleError(
            f"n={n} exceeds the desk-scale limit {limit}; "
            "set OPSTAT_MAX_N or pass allow_large=True to override"
        )


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------

@cache
def stirling2(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if k <= 0 or k > n:
        return 0
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


def fubini(n: int) -> int:
    """Number of ordered set partitions of [n]."""
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def set_partitions(n: int, k: int | None = None) -> Iterator[OrderedSetPartition]:
    """Standard-form partitions of [n] (into k blocks when k is given), in
    lexicographic order of their block-index words."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        if k in (None, 0):
            yield OrderedSetPartition(0, ())
        return
    blocks: list[list[int]] = []

    def rec(i: int) -> Iterator[OrderedSetPartition]:
        if k is not None and len(blocks) + (n - i + 1) < k:
            return
        if i > n:
            if k is None or len(blocks) == k:
                yield OrderedSetPartition.from_blocks(list(blocks), n=n)
            return
        for j in range(len(blocks)):
            blocks[j].append(i)
            yield from rec(i + 1)
            blocks[j].pop()
        if k is None or len(blocks) < k:
            blocks.append([i])
            yield from rec(i + 1)
            blocks.pop()

    yield from rec(1)


def permutations(k: int) -> Iterator[Permutation]:
    """All permutations of [k], one-line images in lexicographic order."""
    for images in itertools.permutations(range(1, k + 1)):
        yield Permutation(images)


def ordered_set_partitions(
    n: int, k: int | None = None, allow_large: bool = False
) -> Iterator[OrderedSetPartition]:
    """All ordered set partitions of [n] (with k blocks when k is given):
    standard forms in generator order, block orders lexicographic."""
    _check_scale(n, allow_large)
    for std in set_partitions(n, k):
        for sigma in permutations(std.k):
            yield std.rearranged(sigma)


def sigma_partitions(n: int, k: int, sigma: Permutation) -> Iterator[OrderedSetPartition]:
    """The sigma-class: every standard form rearranged by sigma."""
    if sigma.size != k:
        raise ValueError(f"sigma acts on {sigma.size} blocks, expected {k}")
    for std in set_partitions(n, k):
        yield std.rearranged(sigma)


def partitions_of_type(lam: PartitionType, allow_large: bool = False) -> Iterator[OrderedSetPartition]:
    """Ordered partitions with the given type."""
    for pi in ordered_set_partitions(lam.n, lam.k, allow_large=allow_large):
        if pi.partition_type() == lam:
            yield pi


def rearrangements(pi: OrderedSetPartition) -> Iterator[OrderedSetPartition]:
    """The k! reorderings of the blocks of pi (pi's own block order is the
    reference order)."""
    for sigma in permutations(pi.k):
        yield pi.rearranged(sigma)


def words(parts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct rearrangements of the word 1^{n_1} 2^{n_2} ... k^{n_k},
    lexicographically."""
    if any(p < 0 for p in parts):
        raise ValueError("composition parts must be nonnegative")
    counts = [int(p) for p in parts]
    total = sum(counts)
    word: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == total:
            yield tuple(word)
            return
        for letter in range(1, len(counts) + 1):
            if counts[letter - 1]:
                counts[letter - 1] -= 1
                word.append(letter)
                yield from rec()
                word.pop()
                counts[letter - 1] += 1

    return rec()


def compositions(total: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into parts >= min_part."""
    if total == 0:
        yield ()
        return

    def rec(remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(acc)
            return
        for part in range(min_part, remaining + 1):
            acc.append(part)
            yield from rec(remaining - part, acc)
            acc.pop()

    yield from rec(total, [])


def _paths(n: int, k: int) -> Iterator[tuple[str, ...]]:
    """All step sequences of depth k and length n, lexicographic in the
    step order D < E < N < O at each position."""

    def rec(steps: list[str], x: int, y: int, remaining: int) -> Iterator[tuple[str, ...]]:
        east_needed = k - x
        # every remaining descent is an east-ish step, so y can never exceed
        # the east-ish budget; both must also fit in the remaining steps
        if east_needed < 0 or east_needed > remaining or y > east_needed:
            return
        if remaining == 0:
            if y == 0:
                yield tuple(steps)
            return
        if y > 0 and east_needed > 0:
            steps.append("D")
            yield from rec(steps, x + 1, y - 1, remaining - 1)
            steps.pop()
        if east_needed > 0:
            steps.append("E")
            yield from rec(steps, x + 1, y, remaining - 1)
            steps.pop()
        steps.append("N")
        yield from rec(steps, x, y + 1, remaining - 1)
        steps.pop()
        if y > 0:
            steps.append("O")
            yield from rec(steps, x, y, remaining - 1)
            steps.pop()

    yield from rec([], 0, 0, n)


def path_diagrams(n: int, k: int, allow_large: bool = False) -> Iterator[PathDiagram]:
    """All path diagrams of depth k and length n."""
    _check_scale(n, allow_large)
    for steps in _paths(n, k):
        path = LatticePath(steps)
        ranges = []
        for i in range(1, n + 1):
            if steps[i - 1] in ("O", "D"):
                ranges.append(range(path.y(i)))
            else:
                ranges.append(range(path.x(i) + path.y(i) + 1))
        for labels in itertools.product(*ranges):
            yield PathDiagram(path, labels)


def subdiagonal_vectors(k: int) -> Iterator[tuple[int, ...]]:
    """All (c_1, ..., c_k) with 0 <= c_j <= j-1; there are k! of them."""
    return itertools.product(*(range(j) for j in range(1, k + 1)))


# ---------------------------------------------------------------------------
# FamilySpec dispatch
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """A named family of combinatorial objects with its parameters."""

    kind: str  # P | OP | OP_by_type | P_sigma | R | S | words
    n: int | None = None
    k: int | None = None
    sigma: Permutation | None = None
    pi: OrderedSetPartition | None = None
    lam: PartitionType | None = None
    parts: tuple[int, ...] | None = None

    def __post_init__(self):
        kinds = {"P", "OP", "OP_by_type", "P_sigma", "R", "S", "words"}
        if self.kind not in kinds:
            raise ValueError(f"unknown family kind {self.kind!r}; expected one of {sorted(kinds)}")


def generate(spec: FamilySpec, allow_large: bool = False) -> Iterator:
    """Stream the family described by ``spec``, each object exactly once, in
    a deterministic order."""
    if spec.kind == "P":
        return set_partitions(spec.n, spec.k)
    if spec.kind == "OP":
        return ordered_set_partitions(spec.n, spec.k, allow_large=allow_large)
    if spec.kind == "OP_by_type":
        return partitions_of_type(spec.lam, allow_large=allow_large)
    if spec.kind == "P_sigma":
        return sigma_partitions(spec.n, spec.k, spec.sigma)
    if spec.kind == "R":
        return rearrangements(spec.pi)
    if spec.kind == "S":
        return permutations(spec.k)
    if spec.kind == "words":
        return words(spec.parts)
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# The rearrangement bijection beta
# ---------------------------------------------------------------------------

def beta(pi0: OrderedSetPartition, c: Sequence[int]) -> OrderedSetPartition:
    """Rearrange a standard-form partition so that the block entering at the
    j-th opener/singleton lands at the gap relabelled c_j; transients and
    closers rejoin the block holding their original opener.  The resulting
    block order realises MAJ = c_1 + ... + c_k.
    """
    if not pi0.is_standard():
        raise ValueError("beta expects a standard-form partition")
    if len(c) != pi0.k:
        raise ValueError(f"need one entry per block: {pi0.k}")
    lam = pi0.partition_type()
    opener_like = sorted(lam.openers | lam.singletons)
    rank = {el: j for j, el in enumerate(opener_like, start=1)}
    opener_of = {el: block[0] for block in pi0.blocks for el in block}

    blocks: list[list[int]] = []
    active: list[bool] = []
    for i in range(1, pi0.n + 1):
        if i in rank:
            c_j = c[rank[i] - 1]
            if not 0 <= c_j <= rank[i] - 1:
                raise ValueError(f"entry c_{rank[i]}={c_j} outside 0..{rank[i] - 1}")
            pos = _insertion_positions(blocks, active)[c_j]
            blocks.insert(pos, [i])
            active.insert(pos, i in lam.openers)
        else:
            target = opener_of[i]
            idx = next(j for j, b in enumerate(blocks) if active[j] and b[0] == target)
            blocks[idx].append(i)
            if i in lam.closers:
                active[idx] = False
    return OrderedSetPartition.from_blocks(blocks, n=pi0.n)


def beta_inv(pi: OrderedSetPartition) -> tuple[int, ...]:
    """Recover the subdiagonal vector: c_j is the rsb at the j-th opener plus
    the growth of the block major index across that opener's trace step."""
    diagram = psi_inv(pi)
    lam = pi.partition_type()
    opener_like = sorted(lam.openers | lam.singletons)
    return tuple(diagram.labels[i - 1] for i in opener_like)
