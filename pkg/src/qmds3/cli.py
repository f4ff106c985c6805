"""Command-line front end: construct, verify, sweep, lemmas, search.

Exit codes are a stable contract: 0 success / all checks pass, 1 a
mathematical check failed or a construction error occurred, 2 usage or
parse error.  Machine-format documents are JSON with sorted keys and no
timing information, so equal inputs (and equal seeds) produce byte
identical output; wall time appears only in the human-readable text form.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
import time
from pathlib import Path

from . import gf
from .construct import construct
from .errors import MatrixParseError, QmdsError
from .matrix import from_text, to_text
from .partition import build_partition, check_full_norm_sum, check_pair_norm_identity
from .search import SearchConfig, exhaustive_search, randomized_search
from .verify import certificate_to_dict, certify


def _quantum_dict(cert):
    if cert.quantum is None:
        return None
    qp = cert.quantum
    return {"n": qp.n, "k": qp.k, "d": qp.d, "q": qp.q, "mds": qp.mds}


def _quantum_str(cert):
    if cert.quantum is None:
        return "-"
    qp = cert.quantum
    return f"[[{qp.n},{qp.k},{qp.d}]]_{qp.q}"


def _dump(doc):
    return json.dumps(doc, sort_keys=True) + "\n"


# -- construct -------------------------------------------------------------


def cmd_construct(args):
    ctx = gf.make_field(args.p, args.r)
    res = construct(ctx, args.n)
    cert = certify(res.matrix, case=res.case, repaired=res.repaired)
    matrix_text = to_text(res.matrix, case=res.case, repaired=res.repaired)
    cert_json = _dump(certificate_to_dict(cert))

    if args.out:
        out = Path(args.out)
        out.write_text(matrix_text)
        Path(str(out) + ".cert.json").write_text(cert_json)

    if args.format == "machine":
        doc = {
            "matrix": {
                "p": ctx.p,
                "r": ctx.r,
                "n": res.matrix.n,
                "rows": [list(res.matrix.rows[0]), list(res.matrix.rows[1])],
                "case": res.case,
                "repaired": res.repaired,
            },
            "certificate": certificate_to_dict(cert),
        }
        sys.stdout.write(_dump(doc))
    else:
        sys.stdout.write(matrix_text)
        sys.stdout.write(
            f"case={res.case} repaired={1 if res.repaired else 0} "
            f"pass={cert.passes} quantum={_quantum_str(cert)}\n"
        )
    return 0 if cert.passes else 1


# -- verify ----------------------------------------------------------------


def cmd_verify(args):
    try:
        text = Path(args.matrix_file).read_text()
    except OSError as e:
        print(f"cannot read {args.matrix_file}: {e}", file=sys.stderr)
        return 2
    m, case, repaired = from_text(text)
    cert = certify(m, case=case, repaired=repaired)
    if args.format == "machine":
        sys.stdout.write(_dump(certificate_to_dict(cert)))
    else:
        for key, val in sorted(certificate_to_dict(cert).items()):
            sys.stdout.write(f"{key}: {json.dumps(val, sort_keys=True)}\n")
    return 0 if cert.passes else 1


# -- sweep -----------------------------------------------------------------

_WORKER = {}


def _init_worker(p, r):
    ctx = gf.make_field(p, r)
    _WORKER["ctx"] = ctx
    _WORKER["part"] = build_partition(ctx)


def _sweep_one(ctx, part, n):
    row = {"n": n, "case": None, "repaired": False, "pass": False, "quantum": None, "error": None}
    try:
        res = construct(ctx, n, part)
        cert = certify(res.matrix, case=res.case, repaired=res.repaired)
        row.update(
            case=res.case,
            repaired=res.repaired,
            **{"pass": cert.passes},
            quantum=_quantum_dict(cert),
        )
    except QmdsError as e:
        row["error"] = f"{e.__class__.__name__}: {e}"
    return row


def _sweep_task(n):
    return _sweep_one(_WORKER["ctx"], _WORKER["part"], n)


def sweep_rows(p, r, jobs=1):
    """Construct and certify every n in [4, q^2+1]; yields rows in n order."""
    ctx = gf.make_field(p, r)
    lengths = range(4, ctx.order + 2)
    if jobs <= 1:
        part = build_partition(ctx)
        for n in lengths:
            yield _sweep_one(ctx, part, n)
        return
    with multiprocessing.Pool(jobs, initializer=_init_worker, initargs=(p, r)) as pool:
        yield from pool.imap(_sweep_task, lengths, chunksize=16)


def sweep_report(p, r, jobs=1):
    """The machine sweep document (no timing; byte-stable)."""
    ctx = gf.make_field(p, r)
    rows = list(sweep_rows(p, r, jobs))
    passed = sum(1 for row in rows if row["pass"])
    return {
        "p": p,
        "r": r,
        "q": ctx.q,
        "rows": rows,
        "totals": {"rows": len(rows), "passed": passed, "failed": len(rows) - passed},
    }


def cmd_sweep(args):
    start = time.monotonic()
    ctx = gf.make_field(args.p, args.r)
    rows = []
    if args.format == "text":
        print(f"sweep p={args.p} r={args.r} q={ctx.q}: n in [4, {ctx.order + 1}]")
        for row in sweep_rows(args.p, args.r, args.jobs):
            rows.append(row)
            qstr = "-"
            if row["quantum"]:
                qp = row["quantum"]
                qstr = f"[[{qp['n']},{qp['k']},{qp['d']}]]_{qp['q']}"
            status = "pass" if row["pass"] else f"FAIL ({row['error'] or 'checks'})"
            print(
                f"  n={row['n']:<4d} case={row['case'] or '-':<14s} "
                f"repaired={1 if row['repaired'] else 0} {qstr:<16s} {status}"
            )
    else:
        rows = list(sweep_rows(args.p, args.r, args.jobs))

    passed = sum(1 for row in rows if row["pass"])
    report = {
        "p": args.p,
        "r": args.r,
        "q": ctx.q,
        "rows": rows,
        "totals": {"rows": len(rows), "passed": passed, "failed": len(rows) - passed},
    }
    doc = _dump(report)
    if args.out:
        Path(args.out).write_text(doc)
    if args.format == "machine":
        sys.stdout.write(doc)
    else:
        elapsed = time.monotonic() - start
        print(f"totals: {passed}/{len(rows)} passed in {elapsed:.2f}s")
    return 0 if passed == len(rows) else 1


# -- lemmas ----------------------------------------------------------------


def lemmas_report(p, r):
    ctx = gf.make_field(p, r)
    part = build_partition(ctx)
    q = ctx.q
    counts = {}
    all_ok = True
    base_nonzero = [t for t in ctx.nonzero_elements() if ctx.is_in_base(t)]
    for beta in base_nonzero:
        listed = len(ctx.norm_preimages(beta))
        recount = sum(1 for x in ctx.elements() if ctx.norm(x) == beta)
        ok = listed == q + 1 and recount == q + 1
        counts[str(beta)] = {"listed": listed, "recount": recount, "ok": ok}
        all_ok = all_ok and ok
    full_sum = check_full_norm_sum(ctx)
    pair_identity = check_pair_norm_identity(ctx, part)
    all_ok = all_ok and full_sum and pair_identity
    return {
        "p": p,
        "r": r,
        "q": q,
        "preimage_counts": counts,
        "full_norm_sum_zero": full_sum,
        "pair_norm_identity_zero": pair_identity,
        "all_pass": all_ok,
    }


def cmd_lemmas(args):
    report = lemmas_report(args.p, args.r)
    if args.format == "machine":
        sys.stdout.write(_dump(report))
    else:
        print(f"field GF({report['q']}^2), p={args.p} r={args.r}")
        for beta, rec in sorted(report["preimage_counts"].items(), key=lambda kv: int(kv[0])):
            print(
                f"  norm preimages of {beta}: {rec['listed']} listed, "
                f"{rec['recount']} by exhaustive count, expected {report['q'] + 1}: "
                f"{'ok' if rec['ok'] else 'FAIL'}"
            )
        print(f"  full norm sum over all powers is zero: {report['full_norm_sum_zero']}")
        print(f"  paired norm identity holds: {report['pair_norm_identity_zero']}")
        print(f"all pass: {report['all_pass']}")
    return 0 if report["all_pass"] else 1


# -- search ----------------------------------------------------------------


def cmd_search(args):
    if args.p == 2 and not args.allow_even_q:
        print(
            "error: characteristic 2 requires --allow-even-q (experimental mode)",
            file=sys.stderr,
        )
        return 2
    ctx = gf.make_field(args.p, args.r, allow_even=args.allow_even_q)
    config = SearchConfig(
        mode=args.mode,
        seed=args.seed,
        max_candidates=args.max_candidates,
        allow_even_q=args.allow_even_q,
    )
    start = time.monotonic()
    if args.mode == "exhaustive":
        matrices = exhaustive_search(ctx, args.n, config)
    else:
        matrices = randomized_search(ctx, args.n, config)
    elapsed = time.monotonic() - start

    experimental = args.p == 2
    report = {
        "p": args.p,
        "r": args.r,
        "q": ctx.q,
        "n": args.n,
        "mode": args.mode,
        "seed": args.seed if args.mode == "randomized" else None,
        "experimental": experimental,
        "claim": "none (existence open)" if experimental else "verified construction range",
        "count": len(matrices),
        "matrices": [[list(m.rows[0]), list(m.rows[1])] for m in matrices],
    }
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for i, m in enumerate(matrices):
            (out_dir / f"search_{i:04d}.txt").write_text(to_text(m))
    if args.format == "machine":
        sys.stdout.write(_dump(report))
    else:
        banner = " [experimental, existence open]" if experimental else ""
        print(
            f"search p={args.p} r={args.r} n={args.n} mode={args.mode}: "
            f"{len(matrices)} passing matrices{banner}"
        )
        print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    return 0


# -- parser ----------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qmds3",
        description=(
            "Construct, verify and search Hermitian self-orthogonal [n,2] codes "
            "over GF(q^2) with dual distance 3."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, n=False):
        sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
        sp.add_argument("--r", type=int, default=1, help="exponent: q = p^r")
        if n:
            sp.add_argument("--n", type=int, required=True, help="code length")
        sp.add_argument("--format", choices=("text", "machine"), default="text")

    sp = sub.add_parser("construct", help="build one certified matrix")
    add_common(sp, n=True)
    sp.add_argument("--out", help="matrix file path; certificate goes to <out>.cert.json")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="certify a matrix file")
    sp.add_argument("matrix_file")
    sp.add_argument("--format", choices=("text", "machine"), default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="construct and certify every n in [4, q^2+1]")
    add_common(sp)
    sp.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sp.add_argument("--out", help="write the machine report here")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("lemmas", help="norm preimage counts and norm-sum identities")
    add_common(sp)
    sp.set_defaults(func=cmd_lemmas)

    sp = sub.add_parser("search", help="exhaustive or randomized matrix search")
    add_common(sp, n=True)
    sp.add_argument("--mode", choices=("exhaustive", "randomized"), default="exhaustive")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-candidates", type=int, default=200_000)
    sp.add_argument("--allow-even-q", action="store_true")
    sp.add_argument("--out", help="directory for found matrix files")
    sp.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MatrixParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except QmdsError as e:
        print(f"error: {e.__class__.__name__}: {e}", file=sys.stderr)
        return 1


def run():
    raise SystemExit(main())
