"""Markdown report of every built-in fixture: dimensions, multiplicities, congruences,
and the oracle cross-check at each zero-dimensional stratum."""

import argparse
import sys

from equivariant_sw import fixtures
from equivariant_sw.congruence import congruence_report
from equivariant_sw.localmodel import all_matchings, multiplicity
from equivariant_sw.oracle import local_degree
from equivariant_sw.reps import dim_d, dim_d_lift


def fixture_section(fx, rank):
    model = fx.builder(rank)
    lines = [f"## {fx.name} (rank {rank})", "", fx.description, ""]
    lines.append(f"p = {model.order}, d(c) = {dim_d(model)}")
    lines.append("")
    lines.append("| j | d(c,G_j) | m_j | matchings | oracle degrees |")
    lines.append("|---|---|---|---|---|")
    for j in range(model.order):
        res = multiplicity(model, j)
        degrees, count = "", ""
        if res.cancellation is not None and res.d_lift == 0:
            mts = list(all_matchings(res.cancellation))
            count = str(len(mts))
            degrees = ", ".join(
                f"{ld.degree} ({'ok' if ld.newton_agrees else 'MISMATCH'})"
                for ld in (local_degree(res.cancellation, mt) for mt in mts)
            )
        lines.append(f"| {j} | {dim_d_lift(model, j)} | {res.value.value} | {count} | {degrees} |")
    lines.append("")
    for chamber in fx.chambers:
        rep = congruence_report(fx.model(rank, chamber))
        lines.append(f"- chamber `{chamber}`: lhs {rep.lhs.value}, rhs {rep.rhs.value}, {rep.verdict}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ranks", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args(argv)
    print("# Fixture report\n")
    for fx in fixtures.FIXTURES.values():
        for rank in args.ranks:
            print(fixture_section(fx, rank))
    return 0


if __name__ == "__main__":
    sys.exit(main())
