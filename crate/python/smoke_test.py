#!/usr/bin/env python3
"""Smoke test for the permpoly extension module.

Build the module first:

    cargo build -p permpoly-py --release --features extension-module

then run this script from anywhere; it locates the built cdylib under
target/, stages it as an importable module and exercises the main entry
points.
"""

import shutil
import sys
import tempfile
from pathlib import Path


def stage_module() -> None:
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libpermpoly.so",
        root / "target" / "debug" / "libpermpoly.so",
        root / "target" / "release" / "libpermpoly.dylib",
        root / "target" / "debug" / "libpermpoly.dylib",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit(
            "no built module found; run "
            "`cargo build -p permpoly-py --release --features extension-module`"
        )
    newest = max(built, key=lambda p: p.stat().st_mtime)
    stage = Path(tempfile.mkdtemp(prefix="permpoly-"))
    shutil.copy(newest, stage / "permpoly.so")
    sys.path.insert(0, str(stage))


def check(name: str, got, want) -> None:
    if got != want:
        sys.exit(f"FAIL {name}: got {got!r}, want {want!r}")
    print(f"ok {name}")


def main() -> None:
    stage_module()
    import permpoly as pp

    hexagon = pp.gen_g1(2)
    check("g1(2) is the hexagon", (hexagon.n, hexagon.m), (6, 6))
    check("perm_poly(C6)", pp.perm_poly(hexagon), [4, 0, 9, 0, 6, 0, 1])
    check("closed form matches", pp.closed_form_g1(2), pp.perm_poly(hexagon))
    check(
        "oracle route agrees",
        pp.perm_poly_oracle(hexagon),
        pp.perm_poly(hexagon),
    )

    g2 = pp.gen_g2(1)
    check("perm_poly(G2^1)", pp.perm_poly(g2), [9, 0, 15, 0, 7, 0, 1])
    check("biadjacency route", pp.perm_poly_biadjacency(g2), pp.perm_poly(g2))

    k23 = pp.gen_theta(2, 2, 2)
    report = pp.contains_no_even_k23(k23)
    check("K_2,3 is rejected", report["verdict"], False)
    check(
        "rejection carries a witness",
        report["blocks"][0]["witness"]["type"],
        "violation",
    )

    cube = pp.gen_cube()
    check("cube matchings", pp.count_perfect_matchings(cube), 9)
    check("cube fails the cycle oracle", pp.oracle_1cr(cube), False)
    theta = pp.oracle_even_theta(cube)
    lengths = sorted(len(p) - 1 for p in theta["paths"])
    check("cube even-theta path lengths", lengths, [2, 2, 4])

    c6 = pp.gen_cycle(6)
    orientation = pp.orient_graph(c6)
    check("C6 orientation is all-cycles-odd", pp.verify_all_cycles_odd(c6, orientation), True)
    check("C6 orientation is Pfaffian", pp.verify_pfaffian(c6, orientation), True)

    branched = pp.gen_hex_chain(4, "B")
    check(
        "branched hexagon vector",
        pp.perm_poly(branched),
        [81, 0, 648, 0, 2106, 0, 3627, 0, 3645, 0, 2223, 0, 825, 0, 180, 0, 21, 0, 1],
    )
    check(
        "sign-flip transfer agrees",
        pp.borowiecki_transfer(branched),
        pp.perm_poly(branched),
    )

    check("structured determinant", pp.structured_det_dn([3, 3, 3], 1), 20)

    g = pp.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    round_tripped = pp.Graph.from_json(g.to_json())
    check("JSON round trip", round_tripped.edges, g.edges)

    print("all smoke tests passed")


if __name__ == "__main__":
    main()
