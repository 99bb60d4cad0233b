"""``hv`` command-line front end.

Exit codes: 0 success, 1 parse or usage error, 2 invalid psi, 3 bound
exhausted (membership unknown, descent stuck, nilpotency cap hit),
4 a lemma check reported failures.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from . import __version__
from .algebra import bracket
from .modules import (
    CentralCharacter,
    InvalidPsiError,
    ModuleVector,
    Reduced,
    Universal,
    act,
    basis_enumerate,
    defect,
    make_psi,
)
from .solver import (
    LEMMA_IDS,
    BoundExhaustedError,
    Bounds,
    CounterexampleError,
    LemmaRanges,
    descend,
    nilpotency_index,
    submodule_membership,
    verify_lemma,
    whittaker_solve,
)
from .syntax import (
    ParseError,
    describe_index,
    describe_terms,
    format_element,
    format_rational,
    index_text,
    parse_element,
    parse_generator,
    parse_lie,
)

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_USAGE, EXIT_PSI, EXIT_BOUND, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass
class Config:
    psi: tuple | None = None
    psi_extra: dict = field(default_factory=dict)
    xi: tuple = (Fraction(0),) * 4
    bounds: Bounds = Bounds()
    module: str | None = None
    machine: bool = False


_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def _rational(text) -> Fraction:
    """Parse an exact ``p`` or ``p/q`` string (JSON integers are accepted too)."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    s = str(text).strip() if isinstance(text, str) else ""
    if not _RATIONAL.fullmatch(s) or s.endswith("/0"):
        raise UsageError(f"not an exact rational p/q: {text!r}")
    return Fraction(s)


def load_config(path: str | None) -> Config:
    cfg = Config()
    if not path:
        return cfg
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    psi = raw.get("psi")
    if psi is not None:
        psi = dict(psi)
        try:
            cfg.psi = tuple(_rational(psi.pop(key)) for key in ("L1", "L2", "I1"))
        except KeyError as exc:
            raise UsageError(f"config psi is missing {exc}") from exc
        cfg.psi_extra = {key: _rational(v) for key, v in psi.items()}
    if "xi" in raw:
        xi = raw["xi"]
        if len(xi) != 4:
            raise UsageError("config xi needs four values")
        cfg.xi = tuple(_rational(x) for x in xi)
    if "bounds" in raw:
        b = raw["bounds"]
        cfg.bounds = Bounds(
            degree=int(b.get("degree", 3)), l0=int(b.get("l0", 3)),
            zdeg=int(b.get("zdeg", 2)), gen_index=int(b.get("genIndex", 6)),
        )
    if "module" in raw:
        cfg.module = raw["module"]
    return cfg


def _extra_generators(extra: dict):
    from .algebra import Generator

    out = {}
    for key, value in extra.items():
        if len(key) < 2 or key[0] not in "LI" or not key[1:].lstrip("-").isdigit():
            raise UsageError(f"unknown psi key {key!r}")
        out[Generator(key[0], int(key[1:]))] = value
    return out


def _module(cfg: Config, default: str = "universal"):
    if cfg.psi is None:
        raise UsageError("this command needs psi (use --config or --psi)")
    psi = make_psi(*cfg.psi, extra=_extra_generators(cfg.psi_extra))
    kind = cfg.module or default
    if kind == "universal":
        return Universal(psi)
    if kind == "reduced":
        return Reduced(psi, CentralCharacter(*cfg.xi))
    raise UsageError(f"unknown module kind {kind!r}")


def _read(text: str) -> str:
    return sys.stdin.read() if text == "-" else text


def _vector(text: str, spec) -> ModuleVector:
    v = parse_element(_read(text), spec)
    if not isinstance(v, ModuleVector):
        raise UsageError("expected a module element (terms ending in w)")
    return v


def _vec_json(v: ModuleVector) -> dict:
    return {"kind": "module", "text": format_element(v), "terms": describe_terms(v)}


# -- subcommands ------------------------------------------------------------

def cmd_bracket(args, cfg):
    x, y = parse_lie(_read(args.x)), parse_lie(_read(args.y))
    r = bracket(x, y)
    return EXIT_OK, format_element(r), {"kind": "lie", "text": format_element(r), "terms": describe_terms(r)}


def cmd_normalize(args, cfg):
    parsed = parse_element(_read(args.expr))
    if isinstance(parsed, ModuleVector):
        raise UsageError("normalize expects an algebra element; use act for module vectors")
    u = parsed.to_uea()
    return EXIT_OK, format_element(u), {"kind": "uea", "text": format_element(u), "terms": describe_terms(u)}


def cmd_act(args, cfg):
    spec = _module(cfg)
    g = parse_generator(args.gen)
    v = _vector(args.vector, spec)
    out = defect(g, v) if args.command == "defect" else act(g, v)
    return EXIT_OK, format_element(out), _vec_json(out)


def cmd_solve(args, cfg):
    spec = _module(cfg)
    sols = whittaker_solve(spec, cfg.bounds)
    text = f"dimension {len(sols)}: " + ", ".join(format_element(v) for v in sols)
    return EXIT_OK, text, {"dimension": len(sols), "basis": [_vec_json(v) for v in sols]}


def cmd_descend(args, cfg):
    spec = _module(cfg, default="reduced")
    if not isinstance(spec, Reduced):
        raise UsageError("descend runs in a reduced module")
    v = _vector(args.vector, spec)
    if not v:
        raise UsageError("cannot descend from the zero vector")
    res = descend(v)
    trace = [format_element(g) for g in res.trace]
    text = "trace: " + (" ".join(trace) or "(empty)") + "\nresult: " + format_element(res.result)
    return EXIT_OK, text, {"trace": trace, "scalar": format_rational(res.scalar),
                           "result": _vec_json(res.result)}


def cmd_nilpotency(args, cfg):
    spec = _module(cfg)
    g = parse_generator(args.gen)
    v = _vector(args.vector, spec)
    K = nilpotency_index(g, v, args.cap)
    return EXIT_OK, f"nilpotency index {K}", {"index": K}


def cmd_member(args, cfg):
    spec = _module(cfg, default="reduced")
    target = _vector(args.target, spec)
    gens = [_vector(t, spec) for t in args.gens]
    res = submodule_membership(target, gens, cfg.bounds)
    if not res.member:
        doc = {"status": "unknownWithinBounds", "explored": res.explored}
        return EXIT_BOUND, f"unknownWithinBounds (explored {res.explored} vectors)", doc
    witness = [{"coefficient": format_rational(c), "generator": pos,
                "word": [format_element(g) for g in word]} for c, pos, word in res.witness]
    lines = ["member"]
    for c, pos, word in res.witness:
        ops = "*".join(format_element(g) for g in word) or "1"
        lines.append(f"  {format_rational(c)} * ({ops}) . gen[{pos}]")
    return EXIT_OK, "\n".join(lines), {"status": "member", "witness": witness}


def cmd_verify(args, cfg):
    if cfg.psi is None:
        raise UsageError("verify needs psi (use --config or --psi)")
    psi = make_psi(*cfg.psi, extra=_extra_generators(cfg.psi_extra))
    Universal(psi)
    ranges = LemmaRanges(a_max=args.a_max, k_max=args.k_max, m_max=args.m_max,
                         degree=cfg.bounds.degree if args.degree is None else args.degree,
                         l0=args.l0 if args.l0 is not None else 2, n_max=args.n_max)
    ids = LEMMA_IDS if args.lemma == "all" else (args.lemma,)
    reports = [verify_lemma(i, psi, ranges) for i in ids]
    lines, docs = [], []
    for rep in reports:
        lines.append(rep.summary())
        for params, expected, got in rep.failures:
            lines.append(f"  FAIL {params}: expected {expected}, got {got}")
        docs.append({"lemma": rep.lemma_id, "instances": rep.instances,
                     "failures": [{"parameters": repr(p), "expected": repr(e), "got": repr(g)}
                                  for p, e, g in rep.failures]})
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY
    return code, "\n".join(lines), {"reports": docs}


def cmd_basis(args, cfg):
    spec = _module(cfg)
    b = cfg.bounds
    idxs = basis_enumerate(spec, b.degree, b.l0, b.zdeg if isinstance(spec, Universal) else 0)
    text = f"{len(idxs)} basis vectors\n" + "\n".join(index_text(i) for i in idxs)
    return EXIT_OK, text, {"count": len(idxs), "basis": [describe_index(i) for i in idxs]}


COMMANDS = {
    "bracket": cmd_bracket, "normalize": cmd_normalize, "act": cmd_act, "defect": cmd_act,
    "solve": cmd_solve, "descend": cmd_descend, "nilpotency": cmd_nilpotency,
    "member": cmd_member, "verify": cmd_verify, "basis": cmd_basis,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH")
    common.add_argument("--module", choices=["universal", "reduced"])
    common.add_argument("--psi", metavar="L1,L2,I1", help="psi values, e.g. 2,3,5")
    common.add_argument("--xi", metavar="X0,X1,X2,X3", help="central character")
    common.add_argument("--degree", type=int)
    common.add_argument("--l0", type=int)
    common.add_argument("--zdeg", type=int)
    common.add_argument("--gen-index", type=int)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="hv", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hv {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bracket", parents=[common], help="Lie bracket of two elements")
    s.add_argument("x")
    s.add_argument("y")
    s = sub.add_parser("normalize", parents=[common], help="PBW normal form of a product")
    s.add_argument("expr")
    for name in ("act", "defect"):
        s = sub.add_parser(name, parents=[common], help=f"{name} of a generator on a vector")
        s.add_argument("gen")
        s.add_argument("vector")
    sub.add_parser("solve", parents=[common], help="Whittaker vectors within bounds")
    s = sub.add_parser("descend", parents=[common], help="reduce a vector to the cyclic one")
    s.add_argument("vector")
    s = sub.add_parser("nilpotency", parents=[common], help="dot-action nilpotency index")
    s.add_argument("gen")
    s.add_argument("vector")
    s.add_argument("--cap", type=int, default=20)
    s = sub.add_parser("member", parents=[common], help="bounded submodule membership")
    s.add_argument("target")
    s.add_argument("gens", nargs="+")
    s = sub.add_parser("verify", parents=[common], help="check a degree lemma")
    s.add_argument("--lemma", required=True, choices=list(LEMMA_IDS) + ["all"])
    s.add_argument("--a-max", type=int, default=3)
    s.add_argument("--k-max", type=int, default=3)
    s.add_argument("--m-max", type=int, default=6)
    s.add_argument("--n-max", type=int, default=8)
    sub.add_parser("basis", parents=[common], help="list the truncated module basis")
    return p


def _apply_flags(cfg: Config, args) -> Config:
    if args.psi:
        parts = args.psi.split(",")
        if len(parts) != 3:
            raise UsageError("--psi needs three comma-separated values")
        cfg.psi = tuple(_rational(x) for x in parts)
        cfg.psi_extra = {}
    if args.xi:
        parts = args.xi.split(",")
        if len(parts) != 4:
            raise UsageError("--xi needs four comma-separated values")
        cfg.xi = tuple(_rational(x) for x in parts)
    if args.module:
        cfg.module = args.module
    b = cfg.bounds
    cfg.bounds = replace(
        b,
        degree=b.degree if args.degree is None else args.degree,
        l0=b.l0 if args.l0 is None or args.command == "verify" else args.l0,
        zdeg=b.zdeg if args.zdeg is None else args.zdeg,
        gen_index=b.gen_index if args.gen_index is None else args.gen_index,
    )
    cfg.machine = args.json
    return cfg


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    machine = getattr(args, "json", False)
    try:
        cfg = _apply_flags(load_config(args.config), args)
        code, text, doc = COMMANDS[args.command](args, cfg)
    except (ParseError, UsageError, ValueError) as exc:
        code, text, doc = EXIT_USAGE, None, {"error": str(exc)}
        if isinstance(exc, InvalidPsiError):
            code = EXIT_PSI
    except CounterexampleError as exc:
        code, text, doc = EXIT_BOUND, None, {"error": f"counterexample: {exc}"}
    except BoundExhaustedError as exc:
        code, text, doc = EXIT_BOUND, None, {"error": str(exc)}
    if machine:
        payload = {"schemaVersion": SCHEMA_VERSION, "command": args.command, "exitCode": code}
        payload.update(doc if text is not None else {"error": doc["error"]})
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    elif text is not None:
        out.write(text + "\n")
    else:
        err.write(f"hv: {doc['error']}\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
