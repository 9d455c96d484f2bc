"""Motzkin-path encoding of unordered (standard-form) set partitions and the
label-transport involution built on it.

Each element draws one step: strict openers rise (U), strict closers fall
(D), singletons and transients stay flat (F).  The label of a step records
one plus the number of still-open blocks left of the element's block, which
is 1 + lsb_i; rising steps always carry label 1.  Heights count the open
blocks, so the labels are bounded by the step height (falling/flat-transient)
or height + 1 (flat-singleton).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import OrderedSetPartition
from .statistics import coord_stats

__all__ = [
    "MotzkinDiagram",
    "motzkin_encode",
    "motzkin_decode",
    "motzkin_g",
    "lambda_map",
]

UP, FLAT, DOWN = "U", "F", "D"
_STEPS = {UP, FLAT, DOWN}


@dataclass(frozen=True)
class MotzkinDiagram:
    """A Motzkin path (steps U/F/D, heights >= 0, closed) with 1-based step
    labels: U steps carry 1, D steps 1..h, F steps 1..h+1, where h is the
    height at which the step starts."""

    steps: tuple[str, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.steps) != len(self.labels):
            raise ValueError("one label per step required")
        h = 0
        for i, (step, label) in enumerate(zip(self.steps, self.labels), start=1):
            if step not in _STEPS:
                raise ValueError(f"bad step {step!r} at position {i}")
            if step == UP:
                if label != 1:
                    raise ValueError(f"rising step {i} must carry label 1")
                h += 1
            elif step == DOWN:
                if not 1 <= label <= h:
                    raise ValueError(f"label {label} at falling step {i} outside 1..{h}")
                h -= 1
            else:
                if not 1 <= label <= h + 1:
                    raise ValueError(f"label {label} at flat step {i} outside 1..{h + 1}")
        if h != 0:
            raise ValueError("path does not return to height 0")

    @property
    def n(self) -> int:
        return len(self.steps)

    @cached_property
    def start_heights(self) -> tuple[int, ...]:
        hs = []
        h = 0
        for step in self.steps:
            hs.append(h)
            if step == UP:
                h += 1
            elif step == DOWN:
                h -= 1
        return tuple(hs)

    def to_text(self) -> str:
        return f"{''.join(self.steps)} {','.join(str(v) for v in self.labels)}"

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str) -> MotzkinDiagram:
        body = text.strip().replace(":", " ")
        parts = body.split()
        steps = tuple(parts[0].upper())
        labels = tuple(int(t) for t in " ".join(parts[1:]).replace(",", " ").split())
        return cls(steps, labels)

    def to_json(self) -> dict:
        return {"steps": "".join(self.steps), "labels": list(self.labels)}


def motzkin_encode(pi: OrderedSetPartition) -> MotzkinDiagram:
    """Encode a standard-form partition as a labelled Motzkin path."""
    if not pi.is_standard():
        raise ValueError("motzkin_encode expects a standard-form partition")
    lam = pi.partition_type()
    steps = []
    labels = []
    for i in range(1, pi.n + 1):
        if i in lam.openers:
            steps.append(UP)
            labels.append(1)
        else:
            steps.append(DOWN if i in lam.closers else FLAT)
            labels.append(coord_stats(pi, i).lsb + 1)
    return MotzkinDiagram(tuple(steps), tuple(labels))


def motzkin_decode(d: MotzkinDiagram) -> OrderedSetPartition:
    """Inverse of ``motzkin_encode``.

    New blocks always join at the right (their minima increase), so a flat
    step means a singleton exactly when its label exceeds the number of open
    blocks; otherwise it adds a transient to the open block with label-1
    open blocks on its left.
    """
    blocks: list[list[int]] = []
    open_flags: list[bool] = []

    def open_block_at(rank: int) -> int:
        count = 0
        for idx, flag in enumerate(open_flags):
            if flag:
                count += 1
                if count == rank:
                    return idx
        raise ValueError(f"no open block of rank {rank}")

    for i, (step, label, h) in enumerate(
        zip(d.steps, d.labels, d.start_heights), start=1
    ):
        if step == UP:
            blocks.append([i])
            open_flags.append(True)
        elif step == DOWN:
            idx = open_block_at(label)
            blocks[idx].append(i)
            open_flags[idx] = False
        elif label == h + 1:
            blocks.append([i])
            open_flags.append(False)
        else:
            blocks[open_block_at(label)].append(i)
    return OrderedSetPartition.from_blocks(blocks, n=d.n)


def motzkin_g(d: MotzkinDiagram) -> MotzkinDiagram:
    """Reverse the path and transport the labels.

    Rising and falling steps trade places under reversal; every rising step
    of the original, starting at height h, is paired with the first later
    falling step starting at height h+1, and that falling step's label moves
    onto the reversed copy of the rising step.  Flat labels travel with
    their step.  Applying the map twice restores the diagram.
    """
    n = d.n
    heights = d.start_heights
    swap = {UP: DOWN, DOWN: UP, FLAT: FLAT}
    steps = tuple(swap[s] for s in reversed(d.steps))

    down_positions = [i for i in range(1, n + 1) if d.steps[i - 1] == DOWN]
    labels = [0] * n
    for i in range(1, n + 1):
        step = d.steps[i - 1]
        rev = n + 1 - i
        if step == FLAT:
            labels[rev - 1] = d.labels[i - 1]
        elif step == UP:
            partner = next(
                c for c in down_positions if c > i and heights[c - 1] == heights[i - 1] + 1
            )
            labels[rev - 1] = d.labels[partner - 1]
        else:
            labels[rev - 1] = 1
    return MotzkinDiagram(steps, tuple(labels))


def lambda_map(pi: OrderedSetPartition) -> OrderedSetPartition:
    """Involution on standard-form partitions exchanging the statistics mak
    (= ros + lcs) and rcb while preserving lcb and the block count."""
    return motzkin_decode(motzkin_g(motzkin_encode(pi)))
