"""Command-line front end: ``coha <command> --quiver FILE ...``.

Exit codes: 0 success, 1 verification failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .algebra import element_from_json, muln
from .errors import CohaError, InputError
from .poly import format_poly
from .quantum import codim, normal_form, verify_factorization
from .quiver import _components, load_quiver_file, validate_partition
from .roots import combined_reineke_order, format_root, is_reineke_order, parse_root
from .strata import euler_class, is_conditional, stratum_class, verify_structure_iso, y_system

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    quiver: str
    blocks: list | None = None
    gamma: list | None = None
    m: object = None
    box: list | None = None
    kmax: int = 4
    out: str | None = None
    elements: object = None


def _json_arg(text: str | None, what: str):
    if text is None:
        return None
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {what} file: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} is not valid JSON: {exc}") from exc


def _int_vector(value, n: int, what: str) -> tuple:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise InputError(f"{what} must be a JSON list of integers")
    if len(value) != n:
        raise InputError(f"{what} has {len(value)} entries, expected {n}")
    return tuple(value)


def _partition(cfg: RunConfig, q, default: str):
    raw = cfg.blocks
    if raw is None:
        raw = _file_blocks(cfg)
    if raw is None:
        raw = _components(list(q.vertices), q.arrows) if default == "components" else [[v] for v in q.vertices]
    return validate_partition(q, raw, require_dynkin=True)


def _file_blocks(cfg: RunConfig):
    _, blocks = load_quiver_file(cfg.quiver)
    return blocks


def _m_vector(value, order, n: int) -> tuple:
    if isinstance(value, dict):
        m = [0] * len(order)
        for key, k in value.items():
            beta = parse_root(key, n)
            if beta not in order.roots:
                raise InputError(f"{key} is not a positive root of the partition")
            if not isinstance(k, int) or k < 0:
                raise InputError(f"multiplicity of {key} must be a non-negative integer")
            m[order.roots.index(beta)] += k
        return tuple(m)
    return _int_vector(value, len(order), "--m")


def cmd_roots(cfg: RunConfig) -> tuple[int, dict]:
    q, _ = load_quiver_file(cfg.quiver)
    p = _partition(cfg, q, "components")
    order = combined_reineke_order(p)
    ok = is_reineke_order(q, order.roots)
    return (EXIT_OK if ok else EXIT_FAILED), {
        "blocks": [list(b) for b in p.blocks],
        "types": list(p.types),
        "roots": [format_root(b) for b in order.roots],
        "vectors": [list(b) for b in order.roots],
        "order_valid": ok,
    }


def cmd_multiply(cfg: RunConfig) -> tuple[int, dict]:
    q, _ = load_quiver_file(cfg.quiver)
    data = cfg.elements
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list) or not data:
        raise InputError("--elements must be a non-empty JSON list of elements")
    factors = [element_from_json(q, d) for d in data]
    return EXIT_OK, muln(factors).to_json()


def cmd_stratum(cfg: RunConfig) -> tuple[int, dict]:
    q, _ = load_quiver_file(cfg.quiver)
    p = _partition(cfg, q, "singletons")
    order = combined_reineke_order(p)
    if cfg.m is None:
        raise InputError("stratum needs --m")
    m = _m_vector(cfg.m, order, q.vertex_count)
    cls = stratum_class(p, m, order)
    eps = euler_class(p, m, order)
    c = codim(p, m, order)
    sign, w = normal_form(p, m, order)
    ok = eps.degree() == c
    return (EXIT_OK if ok else EXIT_FAILED), {
        "roots": [format_root(b) for b in order.roots],
        "m": list(m),
        "class": cls.to_json(),
        "euler_class": format_poly(eps),
        "codim": c,
        "normal_form": {"sign": sign, "q_exponent": str(w)},
        "y_sets": {f"{i},{u},{v}": list(ks) for (i, u, v), ks in sorted(y_system(p, m, order).sets.items())},
        "degree_equals_codim": ok,
        "conditional_on_rational_singularities": is_conditional(p),
    }


def cmd_dilog_verify(cfg: RunConfig) -> tuple[int, dict]:
    q, _ = load_quiver_file(cfg.quiver)
    p = _partition(cfg, q, "singletons")
    box = _int_vector(cfg.box, q.vertex_count, "--box") if cfg.box is not None else (3,) * q.vertex_count
    if any(b < 0 for b in box):
        raise InputError("--box entries must be non-negative")
    order = combined_reineke_order(p)
    res = verify_factorization(p, box, order)
    out = {"box": list(box), "roots": [format_root(b) for b in order.roots], **res.to_json()}
    return (EXIT_OK if res.ok else EXIT_FAILED), out


def cmd_structure_verify(cfg: RunConfig) -> tuple[int, dict]:
    q, _ = load_quiver_file(cfg.quiver)
    p = _partition(cfg, q, "singletons")
    if cfg.gamma is None:
        raise InputError("structure-verify needs --gamma")
    gamma = _int_vector(cfg.gamma, q.vertex_count, "--gamma")
    if cfg.kmax < 0:
        raise InputError("--kmax must be non-negative")
    reports = verify_structure_iso(p, gamma, cfg.kmax)
    ok = all(r.verified for r in reports)
    return (EXIT_OK if ok else EXIT_FAILED), {
        "gamma": list(gamma),
        "degrees": [r.to_json() for r in reports],
        "verified": ok,
    }


COMMANDS = {
    "roots": cmd_roots,
    "multiply": cmd_multiply,
    "stratum": cmd_stratum,
    "dilog-verify": cmd_dilog_verify,
    "structure-verify": cmd_structure_verify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coha", description="Computations in the cohomological Hall algebra of a quiver.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--quiver", required=True, help="quiver JSON file")
        sp.add_argument("--blocks", help="subquiver partition as JSON, e.g. [[1],[2,3]]")
        sp.add_argument("--out", help="also write the JSON result here")
        if name == "multiply":
            sp.add_argument("--elements", required=True, help='JSON list of {"gamma","poly"} or @file')
        if name == "stratum":
            sp.add_argument("--m", required=True, help='multiplicities: list in root order or {"e1+e2": 1}')
        if name == "dilog-verify":
            sp.add_argument("--box", help="truncation box (default 3 at every vertex)")
        if name == "structure-verify":
            sp.add_argument("--gamma", required=True, help="dimension vector")
            sp.add_argument("--kmax", type=int, default=4)
    return ap


def _config(ns) -> RunConfig:
    return RunConfig(
        command=ns.command,
        quiver=ns.quiver,
        blocks=_json_arg(ns.blocks, "--blocks"),
        gamma=_json_arg(getattr(ns, "gamma", None), "--gamma"),
        m=_json_arg(getattr(ns, "m", None), "--m"),
        box=_json_arg(getattr(ns, "box", None), "--box"),
        kmax=getattr(ns, "kmax", 4),
        out=ns.out,
        elements=_json_arg(getattr(ns, "elements", None), "--elements"),
    )


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = _config(ns)
        code, result = COMMANDS[cfg.command](cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CohaError as exc:
        print(f"internal check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    text = json.dumps(result, indent=2, ensure_ascii=False)
    print(text)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n", encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
