#!/usr/bin/env python3
"""Smoke test for the extremal_lab_py extension module.

Builds the cdylib if needed, loads it, and exercises the main types and
operations end to end. Run from the repository root:

    python3 python/smoke_test.py [--release]
"""

import argparse
import pathlib
import shutil
import subprocess
import sys
import tempfile


def build_and_import(release: bool):
    root = pathlib.Path(__file__).resolve().parent.parent
    profile = "release" if release else "debug"
    lib = root / "target" / profile / "libextremal_lab_py.so"
    if not lib.exists():
        cmd = ["cargo", "build", "-p", "extremal-lab-py"]
        if release:
            cmd.append("--release")
        subprocess.run(cmd, cwd=root, check=True)
    if not lib.exists():
        sys.exit(f"extension library not found at {lib}")
    stage = pathlib.Path(tempfile.mkdtemp(prefix="extremal_lab_py_"))
    shutil.copy2(lib, stage / "extremal_lab_py.so")
    sys.path.insert(0, str(stage))
    import extremal_lab_py

    return extremal_lab_py


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--release", action="store_true", help="use the release build")
    args = ap.parse_args()
    lab = build_and_import(args.release)
    checks = 0

    def ok(name, cond):
        nonlocal checks
        if not cond:
            sys.exit(f"FAIL {name}")
        checks += 1
        print(f"ok {name}")

    # graph basics
    k4 = lab.Graph.complete(4)
    ok("K4 edges", k4.edge_count() == 6)
    ok("K4 triangles", k4.count_cliques(3) == 4)
    ok("K4 circumference", k4.circumference() == 4)
    ok("K4 matching", k4.matching_number() == 2)

    c5 = lab.Graph.cycle(5)
    ok("C5 graph6 roundtrip", lab.Graph.from_graph6(c5.to_graph6()) == c5)
    ok("K3 graph6", lab.Graph.complete(3).to_graph6() == "Bw")

    # composition
    star = lab.Graph.complete(1).join(lab.Graph.independent(5))
    ok("star edges", star.edge_count() == 5)
    two = lab.Graph.complete(3).replicate(2)
    ok("replicate order", two.order() == 6)
    bowtie = two.identify(0, 3)
    tree = bowtie.block_cut_tree()
    ok("bowtie blocks", len(tree["blocks"]) == 2 and tree["strict"])

    # constructions and formulas
    g1 = lab.build_construction("g1", 10, 5, 3)
    ok("G1 order", g1.order() == 10)
    ok("G1 edges", g1.edge_count() == 17)
    ok("G1 triangles", g1.count_cliques(3) == 9)
    ok("G1 free", g1.is_free(5, 3))
    ok("G1 id", lab.construction_id("g1", 10, 5, 3) == "G1[n=10,k=5,s=3]")
    ok(
        "formula matches enumeration",
        lab.formula_clique_count("g1", 10, 5, 3, 3) == g1.count_cliques(3),
    )

    params = lab.derive_params(10, 5, 3, 2)
    ok("derived p", params["p"] == 3 and params["a"] == 1 and params["b"] == 0)

    th = lab.theorem_value(20, 9, 4, 2)
    ok("star branch value", th["value"] == 70)
    ok("matching turan", lab.matching_turan_value(7, 2, 2) == 11)

    part = lab.stability_decompose(g1, 3)
    ok("stability partition", part is not None and len(part["x"]) == 2 and len(part["y"]) == 5)

    # exhaustive search agrees with the matching-bound formula when k > n
    rec = lab.search(7, 8, 2, 2)
    ok("search value", rec["value"] == lab.matching_turan_value(7, 2, 2))
    witness = lab.Graph.from_graph6(rec["witness"])
    ok("witness free", witness.is_free(8, 2))
    ok("witness attains value", witness.count_cliques(2) == rec["value"])

    print(f"PASS: {checks} checks")


if __name__ == "__main__":
    main()
