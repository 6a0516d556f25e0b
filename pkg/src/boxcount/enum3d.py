"""Finite 3D partitions (box piles) and their coloured generating series.

A pile is stored by its diagonal slices: the partition pi_k collects the
heights along the diagonal x - y = k, and a family of slices assembles to a
pile exactly when it increases to the centre and decreases outward,

    ... < pi_(-1) < pi_0 > pi_1 > ...

in the interlacing order.  Enumeration walks central partitions and then
descending interlacing chains on both sides, so each pile is produced once.
"""

from __future__ import annotations

from functools import lru_cache

from boxcount import young
from boxcount.series import Series, _pack


class Diagram3D:
    """An immutable pile of boxes, stored slice-wise."""

    __slots__ = ("center", "neg", "pos")

    def __init__(self, center, neg=(), pos=()):
        young.check_partition(center)
        for side in (neg, pos):
            prev = center
            for p in side:
                young.check_partition(p)
                if not p:
                    raise ValueError("side slices must be non-empty")
                if not young.interlaces(prev, p):
                    raise ValueError("slices must interlace toward the centre")
                prev = p
            # the support ends here, so the last slice sits over the empty one
            if not young.interlaces(prev, ()):
                raise ValueError("outermost slice must interlace over the empty partition")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "neg", tuple(neg))
        object.__setattr__(self, "pos", tuple(pos))

    def __setattr__(self, name, value):
        raise AttributeError("Diagram3D is immutable")

    @classmethod
    def from_slices(cls, slices):
        """Build from a mapping of slice index to partition."""
        slices = {k: tuple(p) for k, p in slices.items() if p}
        center = slices.get(0, ())
        neg = []
        k = -1
        while k in slices:
            neg.append(slices.pop(k))
            k -= 1
        pos = []
        k = 1
        while k in slices:
            pos.append(slices.pop(k))
            k += 1
        slices.pop(0, None)
        if slices:
            raise ValueError(f"gap in slice support; stray indices {sorted(slices)}")
        return cls(center, tuple(neg), tuple(pos))

    @classmethod
    def from_boxes(cls, boxes):
        """Build from a box set, checking closure under coordinate decrease."""
        boxes = set(boxes)
        slices = {}
        for x, y, z in boxes:
            if min(x, y, z) < 0:
                raise ValueError("box coordinates must be non-negative")
            for step in ((x - 1, y, z), (x, y - 1, z), (x, y, z - 1)):
                if min(step) >= 0 and step not in boxes:
                    raise ValueError(f"box set is not closed: missing {step}")
            slices.setdefault(x - y, {}).setdefault(min(x, y), set()).add(z)
        parts = {}
        for k, rows in slices.items():
            lam = tuple(len(rows.get(i, ())) for i in range(max(rows) + 1))
            parts[k] = lam
        return cls.from_slices(parts)

    def slices(self):
        out = {}
        if self.center:
            out[0] = self.center
        for k, p in enumerate(self.neg, start=1):
            out[-k] = p
        for k, p in enumerate(self.pos, start=1):
            out[k] = p
        return out

    def boxes(self):
        for k, p in self.slices().items():
            for i, j in young.cells(p):
                if k >= 0:
                    yield (i + k, i, j)
                else:
                    yield (i, i - k, j)

    def volume(self):
        return sum(self.center) + sum(map(sum, self.neg)) + sum(map(sum, self.pos))

    def _key(self):
        return (self.center, self.neg, self.pos)

    def __eq__(self, other):
        return isinstance(other, Diagram3D) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Diagram3D(slices={self.slices()!r})"


@lru_cache(maxsize=None)
def _descending_chains(top, budget):
    """Descending interlacing chains of non-empty partitions below `top`.

    A chain may stop only when its last element (or `top` itself, for the
    empty chain) interlaces over the empty partition, because the slice
    after the chain is empty.
    """
    out = [()] if len(top) <= 1 else []
    for nxt in young.interlacing_below(top):
        if nxt and sum(nxt) <= budget:
            for tail in _descending_chains(nxt, budget - sum(nxt)):
                out.append((nxt,) + tail)
    return tuple(out)


def enumerate_diagrams(max_boxes, shard=0, shards=1):
    """Yield every pile with at most max_boxes boxes, each exactly once.

    With shards > 1 only every shards-th central partition (offset `shard`)
    is expanded, so disjoint shards partition the full stream.
    """
    if shards < 1 or not 0 <= shard < shards:
        raise ValueError("need 0 <= shard < shards")
    index = 0
    for center in young.partitions_up_to(max_boxes):
        if index % shards != shard:
            index += 1
            continue
        index += 1
        if not center:
            yield Diagram3D(())
            continue
        budget = max_boxes - sum(center)
        for pos in _descending_chains(center, budget):
            left = budget - sum(map(sum, pos))
            for neg in _descending_chains(center, left):
                yield Diagram3D(center, neg, pos)


def volume_counts(max_boxes):
    """Number of piles of each volume 0..max_boxes."""
    counts = [0] * (max_boxes + 1)
    for d in enumerate_diagrams(max_boxes):
        counts[d.volume()] += 1
    return counts


def _colour_key(group, diagram):
    from boxcount import colouring

    m = len(group.variables)
    halves = [0] * m
    for x, y, z in diagram.boxes():
        halves[colouring.colour_index(group, x, y, z)] += 2
    return _pack(halves)


def coloured_series(group, trunc, threads=None):
    """Generating series of piles weighted by their colour counts.

    The coefficient of a monomial is the number of piles whose boxes have
    exactly those colour multiplicities; total degree is the box count.
    Shard results are merged in shard order, so the outcome does not depend
    on thread scheduling.
    """
    shards = _resolve_threads(threads)
    if shards <= 1:
        return Series(group.variables, trunc, _colour_shard(group, trunc, 0, 1), _trusted=True)
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=shards) as pool:
        futures = [
            pool.submit(_colour_shard, group, trunc, shard, shards) for shard in range(shards)
        ]
        terms = {}
        for fut in futures:
            for k, c in fut.result().items():
                terms[k] = terms.get(k, 0) + c
    return Series(group.variables, trunc, terms, _trusted=True)


def _colour_shard(group, trunc, shard, shards):
    terms = {}
    for d in enumerate_diagrams(trunc, shard, shards):
        key = _colour_key(group, d)
        terms[key] = terms.get(key, 0) + 1
    return terms


def _resolve_threads(threads):
    if threads is None:
        import os

        threads = int(os.environ.get("BOXCOUNT_THREADS", "1"))
    if threads < 1:
        raise ValueError("thread count must be positive")
    return threads
