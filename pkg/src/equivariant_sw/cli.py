"""Command-line front end.

Every command builds a JSON-safe document first; the human table is rendered
from that same document, so ``--json`` output and the table always agree.

Exit codes: 0 ok, 2 schema / input error, 3 out-of-scope dimension,
4 congruence failure, 5 oracle or fixture self-test failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable, Optional

from equivariant_sw import fixtures
from equivariant_sw.congruence import FAILS, HOLDS, congruence_report, solve_missing
from equivariant_sw.errors import (
    DimensionMismatchError,
    EquivariantSWError,
    OverdeterminedError,
    PositiveDimensionError,
    UnderdeterminedError,
)
from equivariant_sw.localmodel import (
    all_matchings,
    multiplicity,
    multiplicity_from_cancellation,
    psi_exponents,
)
from equivariant_sw.modelfile import SchemaError, dumps_doc, load, load_system, model_to_dict
from equivariant_sw.oracle import (
    SearchSpec,
    Tolerances,
    free_divisibility_check,
    local_degree,
    newton_zero_count,
    orbit_partition,
)
from equivariant_sw.reps import ModelSpec, dim_d, fixed_strata, validate

EXIT_OK, EXIT_SCHEMA, EXIT_DIMENSION, EXIT_CONGRUENCE, EXIT_ORACLE = 0, 2, 3, 4, 5
MAX_ALL_MATCHINGS = 6


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# ------------------------------------------------------------- helpers


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, ok: Optional[bool]) -> str:
    if ok is None or not _use_color(sys.stdout):
        return text
    return f"\x1b[{32 if ok else 31}m{text}\x1b[0m"


def resolve_models(ref: str, rank: int = 1, chamber: Optional[str] = None) -> list[ModelSpec]:
    """A model file path, or a built-in fixture (``fixtures/<name>`` or ``<name>``)."""
    path = Path(ref)
    if path.is_file():
        try:
            return [load(path)]
        except OSError as exc:
            raise CommandError(f"cannot read {ref}: {exc}", EXIT_SCHEMA) from exc
    try:
        fx = fixtures.get(ref)
    except KeyError as exc:
        raise CommandError(f"{ref}: no such file or built-in fixture ({exc.args[0]})", EXIT_SCHEMA)
    if chamber is not None:
        try:
            return [fx.model(rank, chamber)]
        except KeyError as exc:
            raise CommandError(exc.args[0], EXIT_SCHEMA) from None
    return fx.models(rank)


def _tolerances(args) -> Tolerances:
    return Tolerances(newton=args.tol_newton, cluster=args.tol_cluster)


def _fmt_opt(v) -> str:
    return "-" if v is None else str(v)


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[_fmt_opt(c) for c in r] for r in rows]
    widths = [max(len(str(r[i])) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(str(c).rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# --------------------------------------------------------------- dims


def dims_doc(model: ModelSpec) -> dict:
    rep = fixed_strata(model)
    val = validate(model)
    return {
        "command": "dims",
        "label": model.label,
        "p": model.order,
        "d": rep.d,
        "b_plus": model.b_plus,
        "b_plus_fixed": model.h0,
        "lifts": [
            {
                "j": s.j,
                "index": s.index,
                "d_lift": s.d_lift,
                "nonempty": s.nonempty,
                "stratum_dim": s.stratum_dim,
            }
            for s in rep.strata
        ],
        "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in val.checks],
        "chamber_mode": val.chamber_mode,
    }


def render_dims(doc: dict) -> str:
    out = [
        f"model {doc['label'] or '(unnamed)'}  p = {doc['p']}  "
        f"b_+ = {doc['b_plus']}  b_+^G = {doc['b_plus_fixed']}",
        f"d(c) = {doc['d']}",
        _table(
            ["lift", "index", "d(c,G_j)", "stratum dim"],
            [[l["j"], l["index"], l["d_lift"], l["stratum_dim"]] for l in doc["lifts"]],
        ),
        "hypotheses:",
    ]
    for c in doc["checks"]:
        mark = {"pass": "ok  ", "warn": "WARN", "fail": "FAIL"}[c["status"]]
        out.append(f"  [{_paint(mark, c['status'] != 'fail')}] {c['name']}: {c['detail']}")
    return "\n".join(out)


def cmd_dims(args) -> tuple[dict, int]:
    model = resolve_models(args.model, args.rank)[0]
    return dims_doc(model), EXIT_OK


# --------------------------------------------------------------- mult


def mult_doc(model: ModelSpec, lifts: list[int], with_all: bool) -> dict:
    rows = []
    for j in lifts:
        try:
            m = multiplicity(model, j)
        except PositiveDimensionError as exc:
            raise CommandError(f"positive-dimension: {exc}", EXIT_DIMENSION) from exc
        except DimensionMismatchError as exc:
            raise CommandError(f"inconsistent model: {exc}", EXIT_DIMENSION) from exc
        row = {
            "j": j,
            "d_lift": m.d_lift,
            "value": m.value.value,
            "reason": m.reason,
            "empty_stratum": m.empty_stratum,
            "residual_in": list(m.cancellation.residual_in) if m.cancellation else [],
            "residual_out": list(m.cancellation.residual_out) if m.cancellation else [],
            "exponents": list(m.exponents),
        }
        if with_all and m.cancellation is not None:
            data = m.cancellation
            if data.size > MAX_ALL_MATCHINGS:
                raise CommandError(
                    f"lift {j}: residual size {data.size} > {MAX_ALL_MATCHINGS}; "
                    "--all-matchings refused",
                    EXIT_SCHEMA,
                )
            matchings = []
            for mt in all_matchings(data):
                matchings.append(
                    {
                        "pairs": [list(pr) for pr in mt],
                        "exponents": list(psi_exponents(data, mt)),
                        "value": multiplicity_from_cancellation(data, mt).value,
                    }
                )
            row["matchings"] = matchings
            row["all_agree"] = all(x["value"] == m.value.value for x in matchings)
        rows.append(row)
    return {
        "command": "mult",
        "label": model.label,
        "p": model.order,
        "multiplicities": rows,
    }


def render_mult(doc: dict) -> str:
    out = [f"model {doc['label'] or '(unnamed)'}  p = {doc['p']}"]
    out.append(
        _table(
            ["lift", "d(c,G_j)", "m_j", "I", "I'", "psi exponents", "reason"],
            [
                [
                    r["j"],
                    r["d_lift"],
                    r["value"],
                    "{" + ",".join(map(str, r["residual_in"])) + "}",
                    "{" + ",".join(map(str, r["residual_out"])) + "}",
                    "(" + ",".join(map(str, r["exponents"])) + ")",
                    r["reason"] + (" (empty stratum)" if r["empty_stratum"] else ""),
                ]
                for r in doc["multiplicities"]
            ],
        )
    )
    for r in doc["multiplicities"]:
        if "matchings" not in r:
            continue
        out.append(f"lift {r['j']}: {len(r['matchings'])} matching(s)")
        for mt in r["matchings"]:
            pairs = ", ".join(f"{a}->{b}" for a, b in mt["pairs"]) or "(none)"
            out.append(f"  {pairs}: exponents {tuple(mt['exponents'])}, m = {mt['value']}")
        out.append("  " + _paint("all agree" if r["all_agree"] else "DISAGREE", r["all_agree"]))
    return "\n".join(out)


def cmd_mult(args) -> tuple[dict, int]:
    model = resolve_models(args.model, args.rank)[0]
    lifts = [args.lift % model.order] if args.lift is not None else list(range(model.order))
    doc = mult_doc(model, lifts, args.all_matchings)
    bad = any(not r.get("all_agree", True) for r in doc["multiplicities"])
    return doc, EXIT_ORACLE if bad else EXIT_OK


# --------------------------------------------------------- congruence


def congruence_entry(model: ModelSpec, solve: bool) -> dict:
    try:
        rep = congruence_report(model)
    except PositiveDimensionError as exc:
        raise CommandError(f"positive-dimension: {exc}", EXIT_DIMENSION) from exc
    except DimensionMismatchError as exc:
        raise CommandError(f"inconsistent model: {exc}", EXIT_DIMENSION) from exc
    entry = {
        "chamber": rep.chamber,
        "multiplicities": list(rep.mult_values),
        "sw_total": model.sw_total,
        "sw_lifts": list(model.sw_lift) if model.sw_lift is not None else None,
        "lhs": rep.lhs.value if rep.lhs is not None else None,
        "rhs": rep.rhs.value if rep.rhs is not None else None,
        "terms": [list(t) for t in rep.terms],
        "missing": list(rep.missing),
        "verdict": rep.verdict,
        "warnings": list(rep.warnings),
    }
    if solve:
        try:
            sv = solve_missing(model)
            entry["solved"] = {"target": sv.target, "value": sv.value.value, "note": sv.note}
        except (OverdeterminedError, UnderdeterminedError) as exc:
            entry["solved"] = {"error": str(exc)}
    return entry


def render_congruence(doc: dict) -> str:
    p = doc["p"]
    out = [f"model {doc['label'] or '(unnamed)'}  p = {p}"]
    for e in doc["reports"]:
        head = f"chamber {e['chamber']}: " if e["chamber"] else ""
        out.append(f"{head}multiplicities m = {tuple(e['multiplicities'])}")
        for w in e["warnings"]:
            out.append(f"  warning: {w}")
        lhs = f"SW(X,c) = {_fmt_opt(e['sw_total'])}"
        parts = [f"{m}*SW(X,c,G_{j})[{sw}]" for j, m, sw in e["terms"]]
        parts += [f"{m}*SW(X,c,G_{j})[?]" for j, m in
                  ((j, e["multiplicities"][j]) for j in e["missing"])]
        rhs = " + ".join(parts) or "0"
        out.append(f"  {lhs}  vs  {rhs}")
        out.append(
            f"  lhs = {_fmt_opt(e['lhs'])} mod {p}, rhs = {_fmt_opt(e['rhs'])} mod {p}: "
            + _paint(e["verdict"], {HOLDS: True, FAILS: False}.get(e["verdict"]))
        )
        if "solved" in e:
            s = e["solved"]
            if "error" in s:
                out.append(f"  solve: {s['error']}")
            else:
                out.append(f"  solve: SW {s['target']} = {s['value']} mod {p} ({s['note']})")
    return "\n".join(out)


def cmd_congruence(args) -> tuple[dict, int]:
    models = resolve_models(args.model, args.rank, args.chamber)
    doc = {
        "command": "congruence",
        "label": models[0].label,
        "p": models[0].order,
        "reports": [congruence_entry(m, args.solve) for m in models],
    }
    code = EXIT_CONGRUENCE if any(e["verdict"] == FAILS for e in doc["reports"]) else EXIT_OK
    return doc, code


# -------------------------------------------------------------- oracle


def _zero_doc(z) -> dict:
    return {
        "coordinates": [[c.real, c.imag] for c in z.coordinates],
        "sign": z.sign,
        "det": z.det,
        "regular": z.regular,
    }


def local_degree_doc(model: ModelSpec, lifts: list[int], search: Optional[SearchSpec], tol) -> dict:
    rows = []
    for j in lifts:
        try:
            m = multiplicity(model, j)
        except PositiveDimensionError as exc:
            raise CommandError(f"positive-dimension: {exc}", EXIT_DIMENSION) from exc
        if m.cancellation is None:
            rows.append({"j": j, "skipped": "d(c,G_j) < 0", "multiplicity": 0})
            continue
        data = m.cancellation
        matchings = list(all_matchings(data)) if data.size <= 4 else [m.matching]
        for mt in matchings:
            ld = local_degree(data, mt, search=search, tol=tol)
            rows.append(
                {
                    "j": j,
                    "pairs": [list(pr) for pr in mt],
                    "exponents": list(ld.exponents),
                    "degree": ld.degree,
                    "residue": ld.residue.value,
                    "multiplicity": m.value.value,
                    "matches_multiplicity": ld.residue == m.value,
                    "newton_count": len(ld.newton),
                    "newton_signed": sum(z.sign for z in ld.newton),
                    "newton_agrees": ld.newton_agrees,
                    "max_location_error": ld.max_location_error,
                }
            )
    return {"command": "oracle local-degree", "label": model.label, "p": model.order, "rows": rows}


def render_local_degree(doc: dict) -> str:
    out = [f"model {doc['label'] or '(unnamed)'}  p = {doc['p']}"]
    for r in doc["rows"]:
        if "skipped" in r:
            out.append(f"lift {r['j']}: skipped ({r['skipped']})")
            continue
        pairs = ", ".join(f"{a}->{b}" for a, b in r["pairs"]) or "(no residuals)"
        ok = r["matches_multiplicity"] and r["newton_agrees"]
        out.append(
            f"lift {r['j']}  {pairs}: exponents {tuple(r['exponents'])}, degree {r['degree']} "
            f"(mod {doc['p']} = {r['residue']}), m = {r['multiplicity']}; "
            f"newton {r['newton_count']} zeros, signed {r['newton_signed']}: "
            + _paint("match" if ok else "MISMATCH", ok)
        )
    return "\n".join(out)


def render_free_check(doc: dict) -> str:
    out = [
        f"p = {doc['p']}: {doc['passed']}/{doc['trials']} trials pass "
        f"(degree <= {doc['degree_bound']}, seed {doc['seed']}, box {doc['box']})",
        f"free counts: {doc['free_counts']}",
    ]
    if doc["near_singular"]:
        out.append(f"near-singular zeros seen: {doc['near_singular']}")
    for f in doc["failures"]:
        out.append(_paint(f"FAIL trial {f['trial']} seed {f['seed']}: {f['message']}", False))
    return "\n".join(out)


def render_newton(doc: dict) -> str:
    out = [f"system p = {doc['p']}, in weights {tuple(doc['in_weights'])}: {len(doc['zeros'])} zeros"]
    for z in doc["zeros"]:
        coords = ", ".join(f"{re:+.8f}{im:+.8f}i" for re, im in z["coordinates"])
        flag = "" if z["regular"] else "  (near-singular)"
        out.append(f"  ({coords})  sign {z['sign']:+d}  det {z['det']:.6g}{flag}")
    if doc.get("orbits") is not None:
        out.append(
            f"orbits: sizes {tuple(doc['orbits']['sizes'])}, fixed {doc['orbits']['fixed_count']}, "
            f"free {doc['orbits']['free_count']}, total {doc['orbits']['total']}"
        )
    elif doc.get("orbit_error"):
        out.append(f"orbit partition: {doc['orbit_error']}")
    return "\n".join(out)


def cmd_oracle(args) -> tuple[dict, int]:
    tol = _tolerances(args)
    if args.oracle_cmd == "local-degree":
        model = resolve_models(args.model, args.rank)[0]
        lifts = [args.lift % model.order] if args.lift is not None else list(range(model.order))
        search = None
        if args.grid is not None or args.box is not None:
            search = SearchSpec(box=args.box or 2.0, grid=args.grid or 21, exclude_origin=False)
        doc = local_degree_doc(model, lifts, search, tol)
        bad = any(
            not (r["matches_multiplicity"] and r["newton_agrees"])
            for r in doc["rows"]
            if "skipped" not in r
        )
        return doc, EXIT_ORACLE if bad else EXIT_OK

    if args.oracle_cmd == "free-check":
        search = SearchSpec(box=args.box or 2.0, grid=args.grid or 21)
        rep = free_divisibility_check(
            args.p, args.trials, args.degree, search, seed=args.seed, tol=tol
        )
        doc = {
            "command": "oracle free-check",
            "p": args.p,
            "trials": len(rep.trials),
            "passed": rep.passed,
            "degree_bound": args.degree,
            "seed": args.seed,
            "box": search.box,
            "free_counts": [t.free_count for t in rep.trials],
            "near_singular": sum(t.near_singular for t in rep.trials),
            "failures": [
                {"trial": t.trial, "seed": list(t.seed), "message": t.message} for t in rep.failures
            ],
        }
        return doc, EXIT_OK if rep.ok else EXIT_ORACLE

    # newton
    ref = args.system
    if Path(ref).is_file():
        system = load_system(ref)
    else:
        try:
            system = fixtures.get_system(ref)
        except KeyError as exc:
            raise CommandError(exc.args[0], EXIT_SCHEMA) from None
    search = SearchSpec(
        box=args.box or 2.0, grid=args.grid or 21, exclude_origin=not args.keep_origin
    )
    zeros = newton_zero_count(system, search, tol)
    doc = {
        "command": "oracle newton",
        "p": system.p,
        "in_weights": list(system.in_weights),
        "zeros": [_zero_doc(z) for z in zeros],
        "orbits": None,
    }
    code = EXIT_OK
    if system.is_equivariant:
        try:
            rep = orbit_partition(zeros, system.in_weights, system.p, tol.cluster)
            doc["orbits"] = {
                "sizes": list(rep.sizes),
                "fixed_count": rep.fixed_count,
                "free_count": rep.free_count,
                "total": rep.total,
            }
        except EquivariantSWError as exc:
            doc["orbit_error"] = str(exc)
            code = EXIT_ORACLE
    return doc, code


# ------------------------------------------------------------ fixtures


def cmd_fixtures(args) -> tuple[dict, int]:
    if args.fixtures_cmd == "list":
        return {
            "command": "fixtures list",
            "fixtures": [
                {"name": f.name, "description": f.description, "chambers": list(f.chambers)}
                for f in fixtures.FIXTURES.values()
            ],
        }, EXIT_OK
    try:
        fx = fixtures.get(args.name)
        models = [fx.model(args.rank, args.chamber)] if args.chamber else fx.models(args.rank)
    except KeyError as exc:
        raise CommandError(exc.args[0], EXIT_SCHEMA) from None
    return {
        "command": "fixtures show",
        "name": fx.name,
        "models": [model_to_dict(m) for m in models],
        "expected": {
            "multiplicities": list(fx.expected_mult),
            "d_lifts": list(fx.expected_d_lift),
            "verdicts": fx.expected_verdict,
        },
        "provenance": fx.provenance,
        "notes": list(fx.notes),
    }, EXIT_OK


def render_fixtures(doc: dict) -> str:
    if doc["command"] == "fixtures list":
        return "\n".join(
            f"{f['name']:<14} {f['description']}"
            + (f"  [chambers: {', '.join(f['chambers'])}]" if len(f["chambers"]) > 1 else "")
            for f in doc["fixtures"]
        )
    return "\n".join(dumps_doc(m) for m in doc["models"])


# ------------------------------------------------------ check-fixtures


def cmd_check_fixtures(args) -> tuple[dict, int]:
    tol = _tolerances(args)
    rows = []
    for fx in fixtures.FIXTURES.values():
        for rank in (1, 2):
            for model in fx.models(rank):
                rep = congruence_report(model)
                d_lifts = fixed_strata(model).d_lifts
                expected_verdict = fx.expected_verdict.get(model.chamber or "default")
                checks = {
                    "d_zero": dim_d(model) == 0,
                    "d_lifts": d_lifts == fx.expected_d_lift,
                    "multiplicities": rep.mult_values == fx.expected_mult,
                    "verdict": expected_verdict is None or rep.verdict == expected_verdict,
                }
                for m in rep.multiplicities:
                    if m.cancellation is None:
                        continue
                    for mt in all_matchings(m.cancellation):
                        ld = local_degree(m.cancellation, mt, tol=tol)
                        checks[f"oracle_lift{m.j}"] = checks.get(f"oracle_lift{m.j}", True) and (
                            ld.residue == m.value and bool(ld.newton_agrees)
                        )
                rows.append(
                    {
                        "fixture": fx.name,
                        "rank": rank,
                        "chamber": model.chamber,
                        "multiplicities": list(rep.mult_values),
                        "verdict": rep.verdict,
                        "checks": checks,
                        "ok": all(checks.values()),
                    }
                )
    doc = {"command": "check-fixtures", "rows": rows, "ok": all(r["ok"] for r in rows)}
    return doc, EXIT_OK if doc["ok"] else EXIT_ORACLE


def render_check_fixtures(doc: dict) -> str:
    out = []
    for r in doc["rows"]:
        tag = f"{r['fixture']} rank={r['rank']}" + (f" chamber={r['chamber']}" if r["chamber"] else "")
        failed = [k for k, v in r["checks"].items() if not v]
        status = _paint("PASS" if r["ok"] else "FAIL", r["ok"])
        out.append(
            f"{status}  {tag}: m = {tuple(r['multiplicities'])}, verdict {r['verdict']}"
            + (f"  failed: {failed}" if failed else "")
        )
    return "\n".join(out)


# --------------------------------------------------------------- main

RENDERERS: dict[str, Callable[[dict], str]] = {
    "dims": render_dims,
    "mult": render_mult,
    "congruence": render_congruence,
    "oracle local-degree": render_local_degree,
    "oracle free-check": render_free_check,
    "oracle newton": render_newton,
    "fixtures list": render_fixtures,
    "fixtures show": render_fixtures,
    "check-fixtures": render_check_fixtures,
}


def render(doc: dict) -> str:
    return RENDERERS[doc["command"]](doc)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--rank", type=int, default=1, help="fixture rank instantiation x=y=z")
    common.add_argument("--tol-newton", type=float, default=Tolerances.newton)
    common.add_argument("--tol-cluster", type=float, default=Tolerances.cluster)
    common.add_argument("--grid", type=int, default=None, help="seeds per real axis")
    common.add_argument("--box", type=float, default=None, help="search polydisc radius")

    parser = argparse.ArgumentParser(
        prog="equivariant-sw",
        description="Mod-p congruences for Seiberg-Witten invariants under Z_p-actions.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("dims", parents=[common], help="virtual dimensions and hypothesis checks")
    p.add_argument("model", help="model file or fixtures/<name>")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("mult", parents=[common], help="multiplicities m_j")
    p.add_argument("model")
    p.add_argument("--lift", type=int, default=None)
    p.add_argument("--all-matchings", action="store_true")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("congruence", parents=[common], help="both sides of the congruence")
    p.add_argument("model")
    p.add_argument("--chamber", default=None)
    p.add_argument("--solve", action="store_true", help="deduce a single missing SW value")
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("oracle", help="brute-force zero counting")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    q = osub.add_parser("local-degree", parents=[common])
    q.add_argument("--model", required=True)
    q.add_argument("--lift", type=int, default=None)
    q = osub.add_parser("free-check", parents=[common])
    q.add_argument("--p", type=int, default=3)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--degree", type=int, default=4)
    q = osub.add_parser("newton", parents=[common])
    q.add_argument("--system", required=True, help="system file or systems/<name>")
    q.add_argument("--keep-origin", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("fixtures", help="built-in fixtures")
    fsub = p.add_subparsers(dest="fixtures_cmd", required=True)
    fsub.add_parser("list", parents=[common])
    q = fsub.add_parser("show", parents=[common])
    q.add_argument("name")
    q.add_argument("--chamber", default=None)
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("check-fixtures", parents=[common], help="self-test fixture values")
    p.set_defaults(func=cmd_check_fixtures)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (PositiveDimensionError, DimensionMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except EquivariantSWError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(render(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
