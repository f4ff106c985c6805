"""Independent certification of 2-row generator matrices.

A certificate records Hermitian self-orthogonality, rank, minimum distance,
dual distance and purity, and derives the induced quantum code parameters.
The minimum distance of a 2-dimensional code is computed from projective
column multiplicities: the weight of the codeword class [a:b] is n minus the
number of zero columns minus the multiplicity of the single column class it
annihilates, so the minimum over all q^2+1 classes is n - zeros - max
multiplicity.  A brute-force oracle that enumerates all q^4 - 1 nonzero
codewords cross-checks this whenever the field is small enough.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import gf
from .errors import (
    NotCertified,
    RankDeficient,
    TooLargeForOracle,
    TooShort,
)
from .matrix import GeneratorMatrix

# brute_min_distance refuses above this many codewords.
DEFAULT_ORACLE_CAP = 10**7
# certify() auto-runs the oracle only when codewords * length stays below this.
CERTIFY_ORACLE_WORK_LIMIT = 2_500_000

PURE = "pure"
IMPURE = "impure"
ZERO_DIM_SPECIAL = "zero_dim_special"


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: int
    q: int
    mds: bool


@dataclass(frozen=True)
class CodeCertificate:
    p: int
    r: int
    q: int
    n: int
    case: str | None
    repaired: bool
    self_orthogonal: bool
    rank: int
    min_distance: int | None
    dual_distance: int | None
    purity: str | None
    oracle_agreement: bool | None
    quantum: QuantumParams | None

    @property
    def passes(self):
        return (
            self.self_orthogonal
            and self.rank == 2
            and self.min_distance == self.n - 1
            and self.dual_distance == 3
        )


def check_self_orthogonal(m: GeneratorMatrix) -> bool:
    """True iff all three Hermitian row products vanish."""
    ctx = m.ctx
    r1, r2 = m.rows
    return (
        gf.hermitian_ip(ctx, r1, r1) == 0
        and gf.hermitian_ip(ctx, r1, r2) == 0
        and gf.hermitian_ip(ctx, r2, r2) == 0
    )


def rank(m: GeneratorMatrix) -> int:
    ctx = m.ctx
    r1, r2 = m.rows
    r1_zero = all(e == 0 for e in r1)
    r2_zero = all(e == 0 for e in r2)
    if r1_zero and r2_zero:
        return 0
    if r1_zero or r2_zero:
        return 1
    j0 = next(j for j, e in enumerate(r1) if e != 0)
    lam = ctx.div(r2[j0], r1[j0])
    if all(r2[j] == ctx.mul(lam, r1[j]) for j in range(m.n)):
        return 1
    return 2


def _column_class(ctx, u, v):
    """Projective id of a column: None for the zero column, v/u for u != 0,
    ctx.order for (0, *)."""
    if u != 0:
        return ctx.div(v, u)
    if v != 0:
        return ctx.order
    return None


def min_distance(m: GeneratorMatrix) -> int:
    """Exact minimum weight of the rank-2 code generated by m."""
    if rank(m) != 2:
        raise RankDeficient("minimum distance requires rank 2")
    ctx = m.ctx
    zeros = 0
    mult = {}
    for u, v in m.columns():
        cls = _column_class(ctx, u, v)
        if cls is None:
            zeros += 1
        else:
            mult[cls] = mult.get(cls, 0) + 1
    return m.n - zeros - max(mult.values())


def _np_tables(ctx):
    """Cached numpy add and mul tables of shape (order, order)."""
    cached = ctx._caches.get("np_tables")
    if cached is not None:
        return cached
    order = ctx.order
    add_t = np.zeros((order, order), dtype=np.int32)
    for a in range(order):
        for b in range(order):
            add_t[a, b] = ctx.add(a, b)
    mul_t = np.zeros((order, order), dtype=np.int32)
    exp = ctx._exp
    log = ctx._log
    m = order - 1
    for a in range(1, order):
        la = log[a]
        for b in range(1, order):
            mul_t[a, b] = exp[(la + log[b]) % m]
    ctx._caches["np_tables"] = (add_t, mul_t)
    return add_t, mul_t


def brute_min_distance(m: GeneratorMatrix, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Minimum Hamming weight over all q^4 - 1 nonzero codewords a*r1 + b*r2."""
    ctx = m.ctx
    order = ctx.order
    if order * order > cap:
        raise TooLargeForOracle(f"{order * order} codewords exceed cap {cap}")
    add_t, mul_t = _np_tables(ctx)
    r1 = np.array(m.rows[0], dtype=np.int32)
    r2 = np.array(m.rows[1], dtype=np.int32)
    n = m.n
    b_rows = mul_t[np.arange(order, dtype=np.int32)[:, None], r2[None, :]]
    best = n + 1
    for a in range(order):
        words = add_t[mul_t[a, r1][None, :], b_rows]
        weights = n - np.count_nonzero(words == 0, axis=1)
        # weight 0 marks the zero codeword (hit repeatedly when rank < 2)
        nonzero = weights[weights > 0]
        if len(nonzero):
            best = min(best, int(nonzero.min()))
    return best


def dual_distance(m: GeneratorMatrix) -> int:
    """1 with a zero column, 2 with a proportional column pair, else 3."""
    if m.n < 3:
        raise TooShort("dual distance 3 needs n >= 3")
    ctx = m.ctx
    seen = set()
    for u, v in m.columns():
        cls = _column_class(ctx, u, v)
        if cls is None:
            return 1
        seen.add(cls)
    if len(seen) < m.n:
        return 2
    return 3


def _in_row_space(m: GeneratorMatrix, vec) -> bool:
    ctx = m.ctx
    echelon = []
    for row in m.rows:
        row = list(row)
        for prow, ppiv in echelon:
            if row[ppiv] != 0:
                lam = ctx.div(row[ppiv], prow[ppiv])
                row = [ctx.sub(row[j], ctx.mul(lam, prow[j])) for j in range(len(row))]
        piv = next((j for j, e in enumerate(row) if e != 0), None)
        if piv is not None:
            echelon.append((row, piv))
    v = list(vec)
    for prow, ppiv in echelon:
        if v[ppiv] != 0:
            lam = ctx.div(v[ppiv], prow[ppiv])
            v = [ctx.sub(v[j], ctx.mul(lam, prow[j])) for j in range(len(v))]
    return all(e == 0 for e in v)


def _weight3_dual_word(m: GeneratorMatrix, idx):
    """Dual codeword supported exactly on three pairwise independent columns."""
    ctx = m.ctx
    i, j, l = idx
    u1, v1 = m.column(i)
    u2, v2 = m.column(j)
    u3, v3 = m.column(l)
    det = ctx.sub(ctx.mul(u1, v2), ctx.mul(u2, v1))
    x = ctx.div(ctx.sub(ctx.mul(v2, u3), ctx.mul(u2, v3)), det)
    y = ctx.div(ctx.sub(ctx.mul(u1, v3), ctx.mul(v1, u3)), det)
    word = [0] * m.n
    word[i] = x
    word[j] = y
    word[l] = ctx.neg(1)
    return word


def purity_check(m: GeneratorMatrix) -> str:
    """Whether some weight-3 dual codeword falls outside the row space.

    For n = 4 the derived quantum code has dimension zero and the distance
    convention is reported rather than adjudicated.
    """
    if m.n == 4:
        return ZERO_DIM_SPECIAL
    ctx = m.ctx
    tried = 0
    for triple in combinations(range(m.n), 3):
        ids = [_column_class(ctx, *m.column(j)) for j in triple]
        if None in ids or len(set(ids)) != 3:
            continue
        word = _weight3_dual_word(m, triple)
        if not _in_row_space(m, word):
            return PURE
        tried += 1
        if tried >= 200:
            break
    return IMPURE


def certify(
    m: GeneratorMatrix,
    case: str | None = None,
    repaired: bool = False,
    run_oracle="auto",
) -> CodeCertificate:
    """Run every check; failures are recorded in the certificate, not raised."""
    ctx = m.ctx
    so = check_self_orthogonal(m)
    rk = rank(m)
    md = min_distance(m) if rk == 2 else None
    dd = dual_distance(m) if m.n >= 3 else None

    agreement = None
    if md is not None:
        codewords = ctx.order * ctx.order
        wanted = run_oracle is True or (
            run_oracle == "auto" and codewords * m.n <= CERTIFY_ORACLE_WORK_LIMIT
        )
        if wanted:
            agreement = brute_min_distance(m) == md

    partial_pass = so and rk == 2 and md == m.n - 1 and dd == 3
    purity = purity_check(m) if partial_pass else None

    quantum = None
    if partial_pass:
        k = m.n - 4
        quantum = QuantumParams(n=m.n, k=k, d=3, q=ctx.q, mds=(k == m.n - 2 * 3 + 2))

    return CodeCertificate(
        p=ctx.p,
        r=ctx.r,
        q=ctx.q,
        n=m.n,
        case=case,
        repaired=repaired,
        self_orthogonal=so,
        rank=rk,
        min_distance=md,
        dual_distance=dd,
        purity=purity,
        oracle_agreement=agreement,
        quantum=quantum,
    )


def derive_quantum(cert: CodeCertificate) -> QuantumParams:
    """Quantum parameters [[n, n-4, 3]]_q from a passing certificate."""
    if not cert.passes:
        raise NotCertified("certificate does not pass")
    k = cert.n - 4
    d = 3
    if k > cert.n - 2 * d + 2:
        raise NotCertified("quantum Singleton bound violated")  # pragma: no cover
    return QuantumParams(n=cert.n, k=k, d=d, q=cert.q, mds=(k == cert.n - 2 * d + 2))


def certificate_to_dict(cert: CodeCertificate) -> dict:
    q = None
    if cert.quantum is not None:
        q = {
            "n": cert.quantum.n,
            "k": cert.quantum.k,
            "d": cert.quantum.d,
            "q": cert.quantum.q,
            "mds": cert.quantum.mds,
        }
    return {
        "p": cert.p,
        "r": cert.r,
        "n": cert.n,
        "case": cert.case,
        "repaired": cert.repaired,
        "self_orthogonal": cert.self_orthogonal,
        "rank": cert.rank,
        "min_distance": cert.min_distance,
        "dual_distance": cert.dual_distance,
        "purity": cert.purity,
        "quantum": q,
        "oracle_agreement": "skipped" if cert.oracle_agreement is None else cert.oracle_agreement,
        "passes": cert.passes,
    }


def certificate_to_json(cert: CodeCertificate) -> str:
    return json.dumps(certificate_to_dict(cert), sort_keys=True) + "\n"
