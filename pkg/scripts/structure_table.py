"""Per-degree table of product count, rank and graded dimension for the multiplication map."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from coha.quiver import validate_partition, validate_quiver
from coha.strata import verify_structure_iso


@dataclass
class TableConfig:
    vertices: int = 3
    arrows: tuple = ((2, 1), (3, 2))
    blocks: tuple = ((1,), (2, 3))
    gamma: tuple = (1, 1, 1)
    k_max: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--preset", choices=["a2-11", "a2-22", "a3-split", "d4-whole"], default="a3-split")
    ap.add_argument("--kmax", type=int, default=4)
    args = ap.parse_args()
    presets = {
        "a2-11": TableConfig(2, ((2, 1),), ((1, 2),), (1, 1)),
        "a2-22": TableConfig(2, ((2, 1),), ((1, 2),), (2, 2)),
        "a3-split": TableConfig(),
        "d4-whole": TableConfig(4, ((2, 1), (3, 1), (4, 1)), ((1, 2, 3, 4),), (1, 1, 1, 1)),
    }
    cfg = presets[args.preset]
    q = validate_quiver(cfg.vertices, cfg.arrows)
    p = validate_partition(q, cfg.blocks, require_dynkin=True)
    print(f"gamma={list(cfg.gamma)} blocks={[list(b) for b in p.blocks]}")
    print(f"{'k':>3} {'products':>9} {'rank':>6} {'dim':>6}  verified")
    for r in verify_structure_iso(p, cfg.gamma, args.kmax):
        print(f"{r.k:>3} {r.products:>9} {r.rank:>6} {r.graded_dim:>6}  {r.verified}")


if __name__ == "__main__":
    main()
