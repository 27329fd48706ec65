"""List every stratum of a dimension vector with its class, Euler class and codimension."""
from __future__ import annotations

import argparse
import json

from coha.poly import format_poly
from coha.quantum import codim
from coha.quiver import load_quiver_file, validate_partition
from coha.roots import combined_reineke_order, enumerate_partitions, format_root
from coha.strata import euler_class, stratum_class


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quiver", required=True)
    ap.add_argument("--blocks", help="JSON list of blocks; defaults to the whole quiver")
    ap.add_argument("--gamma", required=True, help="JSON dimension vector")
    args = ap.parse_args()
    q, file_blocks = load_quiver_file(args.quiver)
    blocks = json.loads(args.blocks) if args.blocks else file_blocks or [list(q.vertices)]
    p = validate_partition(q, blocks, require_dynkin=True)
    o = combined_reineke_order(p)
    gamma = tuple(json.loads(args.gamma))
    print("roots:", ", ".join(format_root(b) for b in o.roots))
    for m in enumerate_partitions(o.roots, gamma):
        c = codim(p, m, o)
        print(f"m={list(m)} codim={c}")
        print(f"   class: {format_poly(stratum_class(p, m, o).poly)}")
        print(f"   euler: {format_poly(euler_class(p, m, o))}")


if __name__ == "__main__":
    main()
