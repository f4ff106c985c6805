"""The standard split of GF(q^2)* into six special elements and +/- pairs.

With s = alpha^((q-1)/2), the six-element set A = {1, -1, s, -s, s+1, -s-1}
is removed from GF(q^2)* and the remaining q^2 - 7 elements are grouped into
k = (q^2-7)/2 pairs (x, -x).  The pair representative x_i is always the
member with the smaller encoding and pairs are sorted ascending by that
encoding, so every construction that consumes "the first k1 pairs" is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf
from .errors import PartitionDegenerate


@dataclass(frozen=True)
class StandardPartition:
    ctx: gf.FieldCtx
    s: int
    a_elements: tuple
    pairs: tuple

    @property
    def k(self):
        return len(self.pairs)


def build_partition(ctx: gf.FieldCtx) -> StandardPartition:
    """Split GF(q^2)* into the six-element set A and sorted +/- pairs."""
    s = ctx.alpha_pow((ctx.q - 1) // 2)
    one = 1
    s1 = ctx.add(s, one)
    a_elements = (one, ctx.neg(one), s, ctx.neg(s), s1, ctx.neg(s1))
    if len(set(a_elements)) != 6 or 0 in a_elements:
        raise PartitionDegenerate(f"special elements not distinct and nonzero: {a_elements}")

    a_set = set(a_elements)
    pairs = []
    seen = set()
    for x in ctx.nonzero_elements():
        if x in a_set or x in seen:
            continue
        mx = ctx.neg(x)
        seen.add(x)
        seen.add(mx)
        pairs.append((x, mx) if x < mx else (mx, x))
    pairs.sort()
    return StandardPartition(ctx, s, a_elements, tuple(pairs))


def check_full_norm_sum(ctx: gf.FieldCtx) -> bool:
    """Evaluate 1 + alpha^(q+1) + (alpha^2)^(q+1) + ... over all powers; must be 0."""
    acc = 0
    for i in range(ctx.order - 1):
        acc = ctx.add(acc, ctx.norm(ctx.alpha_pow(i)))
    return acc == 0


def check_pair_norm_identity(ctx: gf.FieldCtx, part: StandardPartition) -> bool:
    """Evaluate 2*sum(norm(x_i)) + 2*norm(s+1); must be 0."""
    acc = 0
    for x, _ in part.pairs:
        acc = ctx.add(acc, ctx.norm(x))
    acc = ctx.mul(acc, ctx.from_int(2))
    s1 = ctx.add(part.s, 1)
    acc = ctx.add(acc, ctx.mul(ctx.from_int(2), ctx.norm(s1)))
    return acc == 0


def partial_norm_sum(ctx: gf.FieldCtx, part: StandardPartition, k1: int) -> int:
    """2 * sum of norms of the first k1 pair representatives; lies in GF(q)."""
    if not 0 <= k1 <= part.k:
        raise IndexError(f"k1 = {k1} outside [0, {part.k}]")
    acc = 0
    for x, _ in part.pairs[:k1]:
        acc = ctx.add(acc, ctx.norm(x))
    return ctx.mul(acc, ctx.from_int(2))
