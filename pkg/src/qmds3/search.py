"""Search for passing matrices independently of the case constructions.

Exhaustive mode enumerates 2-dimensional row spaces in reduced row form.
Only the pivot pair (0, 1) can yield a passing matrix: any other pivot
shape forces a zero column or a duplicate of the projective point (1, 0),
so those shapes are skipped.  Candidates are filtered in bulk (numpy) by
the three Hermitian products and column distinctness, and every survivor
is confirmed by the full certificate before being returned.

Randomized repair walks the neighbourhood of a failing matrix: all single
entry edits in deterministic order first, then seeded random multi-entry
edits within the edit budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import TooLargeForExhaustive
from .matrix import GeneratorMatrix
from .verify import _np_tables, certify

EXHAUSTIVE_CAP = 10**8


@dataclass(frozen=True)
class SearchConfig:
    mode: str = "exhaustive"
    max_candidates: int = 200_000
    seed: int = 0
    allow_even_q: bool = False
    edit_budget: int = 2


def _digit_grid(order, width, count, reverse=False):
    base = np.arange(count, dtype=np.int64)
    if reverse:
        base = base[::-1]
    cols = [((base // order**j) % order).astype(np.int32) for j in range(width)]
    return np.stack(cols, axis=1) if width else np.zeros((count, 0), dtype=np.int32)


def _self_orthogonal_rows(ctx, grid, add_t):
    # rows are (1, 0, tail) or (0, 1, tail); the pivot contributes norm 1
    norm_t = np.array([ctx.norm(e) for e in range(ctx.order)], dtype=np.int32)
    acc = np.full(grid.shape[0], 1, dtype=np.int32)
    for j in range(grid.shape[1]):
        acc = add_t[acc, norm_t[grid[:, j]]]
    return grid[acc == 0]


def exhaustive_search(ctx, n: int, config: SearchConfig | None = None, _order="forward"):
    """All passing row spaces of length n, one canonical matrix each.

    Results are sorted by their row tuples, so the output is independent of
    enumeration order.  Raises TooLargeForExhaustive when the canonical
    candidate count exceeds the cap.
    """
    config = config or SearchConfig()
    if n < 3:
        return []
    order = ctx.order
    f = n - 2
    count = order**f
    if count * count > EXHAUSTIVE_CAP:
        raise TooLargeForExhaustive(
            f"{count * count} canonical candidates exceed cap {EXHAUSTIVE_CAP}"
        )

    add_t, mul_t = _np_tables(ctx)
    reverse = _order == "reverse"
    grid = _digit_grid(order, f, count, reverse=reverse)

    a_tails = _self_orthogonal_rows(ctx, grid, add_t)
    b_tails = _self_orthogonal_rows(ctx, grid, add_t)
    if len(a_tails) == 0 or len(b_tails) == 0:
        return []

    conj_t = np.array([ctx.conj(e) for e in range(order)], dtype=np.int32)
    cross = np.zeros((len(a_tails), len(b_tails)), dtype=np.int32)
    for j in range(f):
        prod = mul_t[a_tails[:, j][:, None], conj_t[b_tails[:, j]][None, :]]
        cross = add_t[cross, prod]
    ai, bi = np.nonzero(cross == 0)
    if len(ai) == 0:
        return []
    a_sel = a_tails[ai]
    b_sel = b_tails[bi]

    # projective class of each tail column: v/u if u != 0, `order` if u = 0,
    # order+1 marks the zero column (always rejected)
    inv_t = np.zeros(order, dtype=np.int32)
    for e in range(1, order):
        inv_t[e] = ctx.inv(e)
    cls = np.empty((len(a_sel), n), dtype=np.int32)
    cls[:, 0] = 0  # column (1, 0)
    cls[:, 1] = order  # column (0, 1)
    for j in range(f):
        u = a_sel[:, j]
        v = b_sel[:, j]
        c = mul_t[v, inv_t[u]]
        c = np.where(u == 0, np.where(v == 0, order + 1, order), c)
        cls[:, 2 + j] = c
    has_zero_col = (cls == order + 1).any(axis=1)
    sorted_cls = np.sort(cls, axis=1)
    has_dup = (np.diff(sorted_cls, axis=1) == 0).any(axis=1)
    keep = ~(has_zero_col | has_dup)
    a_sel = a_sel[keep]
    b_sel = b_sel[keep]

    results = []
    for i in range(len(a_sel)):
        rows = (
            (1, 0) + tuple(int(e) for e in a_sel[i]),
            (0, 1) + tuple(int(e) for e in b_sel[i]),
        )
        m = GeneratorMatrix(ctx, rows)
        if certify(m, run_oracle=False).passes:
            results.append(m)
    results.sort(key=lambda m: m.rows)
    return results


def randomized_search(ctx, n: int, config: SearchConfig):
    """Seeded random sampling of canonical matrices; returns passing ones."""
    rng = random.Random(config.seed)
    if n < 3:
        return []
    order = ctx.order
    found = {}
    for _ in range(config.max_candidates):
        rows = (
            (1, 0) + tuple(rng.randrange(order) for _ in range(n - 2)),
            (0, 1) + tuple(rng.randrange(order) for _ in range(n - 2)),
        )
        if rows in found:
            continue
        m = GeneratorMatrix(ctx, rows)
        if certify(m, run_oracle=False).passes:
            found[rows] = m
    return [found[k] for k in sorted(found)]


def _edited(m, edits):
    rows = [list(m.rows[0]), list(m.rows[1])]
    for (i, j), val in edits:
        rows[i][j] = val
    return GeneratorMatrix(m.ctx, (tuple(rows[0]), tuple(rows[1])))


def randomized_repair(ctx, m: GeneratorMatrix, config: SearchConfig):
    """Nearest passing matrix within the edit budget, or None.

    Single-entry edits are tried exhaustively in row-major position order
    and ascending replacement encoding, so the first hit is the canonical
    minimal repair; deeper edits are sampled with the configured seed.
    """
    if certify(m, run_oracle=False).passes:
        raise ValueError("matrix already passes certification; nothing to repair")
    if config.edit_budget < 1:
        return None
    n = m.n
    for i in range(2):
        for j in range(n):
            old = m.rows[i][j]
            for val in range(ctx.order):
                if val == old:
                    continue
                candidate = _edited(m, [((i, j), val)])
                if certify(candidate, run_oracle=False).passes:
                    return candidate
    rng = random.Random(config.seed)
    positions = [(i, j) for i in range(2) for j in range(n)]
    for depth in range(2, config.edit_budget + 1):
        for _ in range(config.max_candidates):
            spots = rng.sample(positions, depth)
            edits = [(pos, rng.randrange(ctx.order)) for pos in spots]
            candidate = _edited(m, edits)
            if candidate.rows == m.rows:
                continue
            if certify(candidate, run_oracle=False).passes:
                return candidate
    return None
