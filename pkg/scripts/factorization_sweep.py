"""Check the dilogarithm factorization over several quivers, partitions and boxes."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field

from coha.quantum import verify_factorization
from coha.quiver import validate_partition, validate_quiver


@dataclass
class Case:
    name: str
    vertices: int
    arrows: list
    blocks: list
    box: tuple


@dataclass
class SweepConfig:
    cases: list = field(default_factory=lambda: [
        Case("A2 whole", 2, [(2, 1)], [[1, 2]], (3, 3)),
        Case("A2 whole, larger box", 2, [(2, 1)], [[1, 2]], (4, 4)),
        Case("A3 whole", 3, [(2, 1), (3, 2)], [[1, 2, 3]], (2, 2, 2)),
        Case("A3 split", 3, [(2, 1), (3, 2)], [[1], [2, 3]], (2, 2, 2)),
        Case("A3 source in middle", 3, [(3, 1), (3, 2)], [[1, 2, 3]], (2, 2, 2)),
        Case("D4 whole", 4, [(2, 1), (3, 1), (4, 1)], [[1, 2, 3, 4]], (1, 1, 1, 1)),
        Case("D4 split", 4, [(2, 1), (3, 1), (4, 1)], [[1, 2], [3], [4]], (1, 1, 1, 1)),
    ])


def run(cfg: SweepConfig) -> list:
    rows = []
    for c in cfg.cases:
        q = validate_quiver(c.vertices, c.arrows)
        p = validate_partition(q, c.blocks, require_dynkin=True)
        t0 = time.perf_counter()
        res = verify_factorization(p, c.box)
        rows.append({"case": c.name, "box": list(c.box), "seconds": round(time.perf_counter() - t0, 3), **res.to_json()})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="print JSON instead of a table")
    args = ap.parse_args()
    rows = run(SweepConfig())
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        print(f"{r['case']:<24} box={r['box']!s:<14} grades={r['grades_checked']:<4} "
              f"{'ok' if r['verified'] else 'MISMATCH'}  {r['seconds']}s")


if __name__ == "__main__":
    main()
