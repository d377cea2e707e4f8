"""Command-line front end: JSON on stdout, diagnostics on stderr.

Exit codes: 0 success / true, 1 failure / false, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .bounds import bounds_report, positive_equalities_check
from .castle import build_castle, find_appropriate_point
from .decompose import MoveScript, decompose_positive, verify
from .diagram import DiagramError, LinkDiagram, parse_braid, parse_pd, remove_trivial_components
from .resolution import homfly

SUBCOMMANDS = ("homfly", "bounds", "castle", "decompose", "verify", "selftest")


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    source: str | None = None
    format: str | None = None  # braid | pd, inferred when None
    engine: str = "coherent"
    output: str | None = None
    seed: int = 20240601
    script: str | None = None
    base: int | None = None
    dot: str | None = None
    assert_positive: bool = False
    quick: bool = False


def read_diagram(source: str, fmt: str | None = None) -> LinkDiagram:
    """Load a diagram from a path or an inline string."""
    path = Path(source)
    text = source
    try:
        if path.is_file():
            text = path.read_text()
            if fmt is None:
                fmt = "pd" if path.suffix.lower() == ".json" else "braid"
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from None
    if fmt is None:
        fmt = "pd" if text.lstrip().startswith("{") else "braid"
    try:
        if fmt == "braid":
            return parse_braid(text.strip())
        if fmt == "pd":
            return parse_pd(text)
    except (DiagramError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed {fmt} input: {exc}") from None
    raise InputError(f"unknown format {fmt!r}")


def read_script(source: str) -> MoveScript:
    path = Path(source)
    try:
        text = path.read_text() if path.is_file() else source
        return MoveScript.from_json(json.loads(text))
    except (OSError, json.JSONDecodeError, DiagramError) as exc:
        raise InputError(f"malformed move script: {exc}") from None


def run(cfg: RunConfig) -> tuple[int, object]:
    """Execute one subcommand; returns ``(exit_code, json_document)``."""
    cmd = cfg.subcommand
    if cmd == "selftest":
        from .acceptance import AcceptanceConfig, run_acceptance

        acfg = AcceptanceConfig(seed=cfg.seed)
        results = run_acceptance(acfg.quick() if cfg.quick else acfg, echo=lambda s: print(s, file=sys.stderr))
        doc = {
            "seed": cfg.seed,
            "criteria": [
                {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results
            ],
        }
        return (0 if all(r.passed for r in results) else 1), doc
    if cfg.source is None:
        raise InputError("missing diagram input")
    D = read_diagram(cfg.source, cfg.format)
    if cmd == "homfly":
        try:
            P = homfly(D, cfg.engine)
        except AssertionError as exc:
            return 1, {"error": str(exc)}
        return 0, {"polynomial": P.to_json(), "text": str(P)}
    if cmd == "bounds":
        report = bounds_report(D, cfg.engine if cfg.engine != "both" else "coherent")
        doc = report.to_json()
        if cfg.assert_positive:
            if not D.is_positive:
                raise InputError("--assert-positive given for a diagram that is not positive")
            eq = positive_equalities_check(D, strict=False)
            doc["positive_equalities"] = eq.to_json()
            return (0 if eq.ok else 1), doc
        return 0, doc
    if cmd == "castle":
        core = remove_trivial_components(D)
        base = cfg.base if cfg.base is not None else (find_appropriate_point(core) if core.crossing_count else None)
        try:
            castle = build_castle(core, base)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if cfg.dot:
            Path(cfg.dot).write_text(castle.to_dot() + "\n")
        return 0, castle.to_json()
    if cmd == "decompose":
        if not D.is_positive:
            raise InputError("decompose needs a positive diagram")
        cert = decompose_positive(D)
        return (0 if cert.decomposable else 1), cert.to_json()
    if cmd == "verify":
        if cfg.script is None:
            raise InputError("verify needs --script")
        ok = verify(read_script(cfg.script), D)
        return (0 if ok else 1), {"verified": ok}
    raise InputError(f"unknown subcommand {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mfwsharp", description="HOMFLY-PT degree bounds and their sharpness")
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        if name != "selftest":
            sp.add_argument("source", help="diagram file or inline braid / PD text")
            sp.add_argument("--format", choices=("braid", "pd"))
        sp.add_argument("--engine", choices=("coherent", "oracle", "both"), default="coherent")
        sp.add_argument("--output", help="write JSON here instead of stdout")
        sp.add_argument("--seed", type=int, default=20240601)
        if name == "verify":
            sp.add_argument("--script", required=True, help="move script file or inline JSON")
        if name == "castle":
            sp.add_argument("--base", type=int, help="arc label of the base point")
            sp.add_argument("--dot", help="also write a DOT rendering here")
        if name == "bounds":
            sp.add_argument("--assert-positive", action="store_true")
        if name == "selftest":
            sp.add_argument("--quick", action="store_true", help="smaller corpora")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        subcommand=args.subcommand,
        source=getattr(args, "source", None),
        format=getattr(args, "format", None),
        engine=args.engine,
        output=args.output,
        seed=args.seed,
        script=getattr(args, "script", None),
        base=getattr(args, "base", None),
        dot=getattr(args, "dot", None),
        assert_positive=getattr(args, "assert_positive", False),
        quick=getattr(args, "quick", False),
    )
    try:
        code, doc = run(cfg)
    except (InputError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(doc, sort_keys=True)
    if cfg.output:
        Path(cfg.output).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
