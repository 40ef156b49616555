"""Write Gram-rank graded dimensions next to Hilbert coefficients as JSON."""

from __future__ import annotations

import argparse
import json

from nichols import catalog
from nichols.oracle import graded_dims
from nichols.pbw import PbwSystem, hilbert_series
from nichols.weyl import GroupoidObject, positive_roots


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("system", choices=sorted(catalog.TEST_SET))
    p.add_argument("--max-total", type=int, default=6)
    args = p.parse_args()
    b = catalog.TEST_SET[args.system]
    series = hilbert_series(PbwSystem(positive_roots(GroupoidObject.of(b))), args.max_total)
    rows = [
        {"multidegree": list(a), "gram_rank": d, "hilbert": series.get(a, 0)}
        for a, d in graded_dims(b, args.max_total).items()
    ]
    print(json.dumps({"system": args.system, "graded_dims": rows}, indent=2))
    return 0 if all(r["gram_rank"] == r["hilbert"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
