"""Roots, presentation and oracle checks for every catalog system."""

from __future__ import annotations

import argparse
import time

from nichols import catalog
from nichols.oracle import graded_dims, in_radical
from nichols.pbw import PbwSystem, dimension, hilbert_series
from nichols.presentation import emit_presentation
from nichols.weyl import GroupoidObject, positive_roots
from nichols.words import to_str


def run(name: str, braiding, bound: int) -> bool:
    t0 = time.perf_counter()
    pbw = PbwSystem(positive_roots(GroupoidObject.of(braiding)))
    print(f"== {name}: rank {braiding.rank}, N = {braiding.modulus}")
    for g in pbw.generators:
        print(f"   {g.root}  {to_str(g.lyndon)}  N_beta = {g.height}")
    print(f"   dim = {dimension(pbw)}")
    pres = emit_presentation(pbw.root_system, bound=bound)
    print(pres.to_text())
    ok = all(in_radical(braiding, r.element(pbw), bound) for r in pres.relations if sum(r.degree) <= bound)
    series = hilbert_series(pbw, bound)
    ok &= all(series.get(a, 0) == d for a, d in graded_dims(braiding, bound).items())
    print(f"   oracle check to degree {bound}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - t0:.2f} s)\n")
    return ok


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--degree-bound", type=int, default=6)
    args = p.parse_args()
    systems = dict(catalog.TEST_SET, ex2_symmetric=catalog.EX2_SYMMETRIC, rank1_i=catalog.RANK1_I)
    results = [run(name, b, args.degree_bound) for name, b in systems.items()]
    return 0 if all(results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
