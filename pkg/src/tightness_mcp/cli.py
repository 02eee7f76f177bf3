# src/tightness_mcp/cli.py
"""Command-line front end.

Complex files (".cplx") hold one facet per line as whitespace-separated
vertex labels; ``#`` starts a comment, and leading ``# key: value`` lines carry
metadata such as the generator that produced the file.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from . import __version__
from .battery import run_battery
from .complex import (
    SimplicialComplex,
    as_simplex,
    boundary_complex,
    connected_components,
    euler_characteristic,
    f_vector,
    from_facets,
    neighbourliness,
)
from .engine import (
    ComplexInputError,
    InvariantViolation,
    SweepLimitError,
    TopologyEngine,
    TopologyError,
    load_engine_config,
)
from .generators import family_names, family_parameters, generate
from .homology import betti_vector
from .invariants import (
    is_orientable,
    is_stacked_with_boundary,
    manifold_status,
    mu_vector,
    poincare_duality_holds,
    sigma_vector,
    verify_stacked_pair,
)
from .linalg import format_rational, parse_rational
from .models import GeneratorSpec, Report
from .tightness import conjecture_b_compare, tight_by_both, tight_by_definition, tight_by_mu

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_SWEEP_LIMIT = 3
EXIT_INTERNAL_ERROR = 4


class ComplexDocument(Report):
    """A parsed complex file: the complex plus its ``# key: value`` metadata."""

    complex: SimplicialComplex
    metadata: Dict[str, str] = {}


def parse_document(text: str) -> ComplexDocument:
    metadata: Dict[str, str] = {}
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, hash_, comment = raw.partition("#")
        if hash_ and not body.strip():
            key, colon, value = comment.partition(":")
            key = key.strip()
            if colon and key and " " not in key:
                metadata[key] = value.strip()
        tokens = body.split()
        if not tokens:
            continue
        try:
            facets.append(as_simplex(int(token) for token in tokens))
        except ValueError:
            raise ComplexInputError(f"line {lineno}: non-integer token in {body.strip()!r}") from None
        except ComplexInputError as exc:
            raise ComplexInputError(f"line {lineno}: {exc}") from None
    return ComplexDocument(complex=from_facets(facets), metadata=metadata)


def parse_complex_text(text: str) -> SimplicialComplex:
    """Build a complex from facet lines; duplicate facets collapse, comments are ignored."""
    return parse_document(text).complex


def serialize_complex(X: SimplicialComplex, metadata: Optional[Dict[str, str]] = None) -> str:
    header = "".join(f"# {key}: {value}\n" for key, value in (metadata or {}).items())
    return header + X.to_text()


def _spec_metadata(spec: GeneratorSpec) -> Dict[str, str]:
    meta = {
        "generator": spec.family,
        "params": " ".join(f"{k}={v}" for k, v in spec.params.items()),
    }
    if spec.seed is not None:
        meta["seed"] = str(spec.seed)
        meta["rng"] = spec.rng or ""
    return meta


def _read_document(path: str) -> ComplexDocument:
    if path == "-":
        return parse_document(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_document(handle.read())
    except OSError as exc:
        raise ComplexInputError(f"Cannot read {path}: {exc.strerror}") from None


def _fmt(values: Sequence[Any]) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


class _Output:
    """Collects one command's result and prints it as a table or as JSON."""

    def __init__(self, args: argparse.Namespace, engine: TopologyEngine):
        self.args = args
        self.engine = engine
        self.rows: List[Tuple[str, str]] = []
        self.payload: Dict[str, Any] = {}
        self.metadata: Dict[str, str] = {}

    def row(self, key: str, value: Any) -> None:
        self.rows.append((key, value if isinstance(value, str) else str(value)))

    def set(self, key: str, value: Any) -> None:
        if isinstance(value, Report):
            value = value.model_dump(mode="json")
        self.payload[key] = value

    def emit(self) -> None:
        if self.args.json:
            document = {
                "version": __version__,
                "command": self.args.command,
                "field": self.engine.field.name,
                "mu_convention": self.engine.config.mu_convention.value,
                "metadata": self.metadata,
                "result": self.payload,
            }
            print(json.dumps(document, indent=2, sort_keys=True))
            return
        width = max((len(key) for key, _ in self.rows), default=0)
        for key, value in self.rows:
            print(f"{key.ljust(width)}  {value}")


def _load(args: argparse.Namespace, out: _Output) -> SimplicialComplex:
    document = _read_document(args.file)
    out.metadata = document.metadata
    return document.complex


def cmd_check(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    X = _load(args, out)
    field = engine.field
    status = manifold_status(X, field, engine)
    report: Dict[str, Any] = {
        "dim": X.dim,
        "f_vector": list(f_vector(X)),
        "euler_characteristic": euler_characteristic(X),
        "pure": X.is_pure,
        "components": connected_components(X),
        "neighbourliness": neighbourliness(X) if not X.is_empty else 0,
        "manifold_status": status.value,
    }
    if X.is_pure and X.dim >= 1:
        report["boundary_facets"] = [list(f) for f in boundary_complex(X).facets]
    if status.is_closed:
        report["orientable"] = is_orientable(X, field, engine)
        report["poincare_duality"] = poincare_duality_holds(X, field, engine)
    for key, value in report.items():
        out.row(key, value)
        out.set(key, value)
    return EXIT_OK


def cmd_betti(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    betti = betti_vector(_load(args, out), engine=engine, reduced=args.reduced)
    out.row("reduced betti" if args.reduced else "betti", _fmt(betti.values))
    out.set("betti", betti)
    return EXIT_OK


def cmd_sigma(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    sigma = sigma_vector(_load(args, out), engine=engine)
    out.row("sigma", _fmt(sigma.values))
    out.set("sigma", sigma)
    return EXIT_OK


def cmd_mu(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    mu = mu_vector(_load(args, out), engine=engine)
    out.row("mu", _fmt(mu.values))
    out.row("convention", mu.convention.value)
    out.set("mu", mu)
    return EXIT_OK


def cmd_tight(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    X = _load(args, out)
    method = engine.config.method
    if method == "mu":
        report = tight_by_mu(X, engine=engine)
    elif method == "direct":
        report = tight_by_definition(X, engine=engine)
    else:
        report = tight_by_both(X, engine=engine)
    out.row("verdict", report.verdict)
    out.row("method", report.method)
    out.row("connected", report.connected)
    out.row("beta", _fmt(report.beta.values))
    if report.mu is not None:
        out.row("mu", _fmt(report.mu.values))
    if report.witness is not None:
        out.row("witness", f"A={{{','.join(map(str, report.witness.vertices))}}} i={report.witness.degree}")
    if report.deciders_agree is not None:
        out.row("deciders agree", report.deciders_agree)
    out.set("tightness", report)
    return EXIT_OK if report.tight else EXIT_PROPERTY_FAILS


def cmd_stacked(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    report = is_stacked_with_boundary(_load(args, out), args.k)
    out.row("k", report.k)
    out.row("stacked", report.holds)
    if report.offending_face is not None:
        out.row("interior face", list(report.offending_face))
    out.set("stacked", report)
    return EXIT_OK if report.holds else EXIT_PROPERTY_FAILS


def cmd_stacked_pair(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    ball = _load(args, out)
    sphere = _read_document(args.sphere).complex if args.sphere else None
    report = verify_stacked_pair(ball, args.k, sphere)
    out.row("k", report.k)
    out.row("stacked", report.holds)
    if report.offending_face is not None:
        out.row("interior face", list(report.offending_face))
    if report.boundary_matches is not None:
        out.row("boundary matches", report.boundary_matches)
    out.set("stacked_pair", report)
    holds = report.holds and report.boundary_matches is not False
    return EXIT_OK if holds else EXIT_PROPERTY_FAILS


def cmd_conjecture_b(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    report = conjecture_b_compare(_load(args, out), args.k, engine=engine)
    out.row("m", report.m)
    out.row("hypotheses", f"dim={report.dimension_ok} neighbourly={report.neighbourly_ok} sphere={report.sphere_ok}")
    out.row(f"sigma_{args.k - 1}", format_rational(report.sigma))
    out.row("formula", f"{format_rational(report.formula)} (match={report.matches_formula})")
    out.row("raw formula", f"{format_rational(report.raw_formula)} (match={report.matches_raw})")
    if report.mu_k is not None:
        out.row(f"mu_{args.k}", f"{format_rational(report.mu_k)} vs {format_rational(report.mu_formula)}")
    out.set("conjecture_b", report)
    return EXIT_OK


def cmd_props(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    report = run_battery(_load(args, out), engine=engine)
    for check in report.checks:
        status = "ok" if check.passed else "FAILED"
        out.row(check.name, f"{status} {check.detail}".rstrip())
    out.set("battery", report)
    out.set("passed", report.passed)
    return EXIT_OK if report.passed else EXIT_PROPERTY_FAILS


def _gen_params(family: str, raw: Sequence[str]) -> Dict[str, Any]:
    names = family_parameters(family)
    if len(raw) != len(names):
        raise ComplexInputError(f"Family {family!r} takes parameters ({', '.join(names)}), got {len(raw)}")
    params: Dict[str, Any] = {}
    for name, text in zip(names, raw):
        try:
            params[name] = parse_rational(text) if name == "density" else int(text)
        except ValueError:
            raise ComplexInputError(f"Parameter {name} must be an integer, got {text!r}") from None
    return params


def cmd_gen(args: argparse.Namespace, engine: TopologyEngine, out: _Output) -> int:
    X, spec = generate(args.family, _gen_params(args.family, args.params), engine.config.seed)
    text = serialize_complex(X, _spec_metadata(spec))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info("wrote %s facets to %s", len(X.facets), args.out)
    if args.json:
        out.set("generator", spec)
        out.set("facets", [list(f) for f in X.facets])
        out.emit()
    elif not args.out:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, TopologyEngine, _Output], int]] = {
    "check": cmd_check,
    "betti": cmd_betti,
    "sigma": cmd_sigma,
    "mu": cmd_mu,
    "tight": cmd_tight,
    "stacked": cmd_stacked,
    "stacked-pair": cmd_stacked_pair,
    "conjecture-b": cmd_conjecture_b,
    "props": cmd_props,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Coefficient field: q, f2, f3 or fp:<p>")
    common.add_argument("--json", action="store_true", help="Emit a JSON report")
    common.add_argument("--limit", type=int, help="Vertex limit for subset sweeps")
    common.add_argument("--seed", type=int, help="Seed for random generators")
    common.add_argument("--mu-convention", choices=["corrected", "raw"], help="Mu-vector numerator convention")
    common.add_argument("--verbose", action="store_true", help="Enable debug logging")

    parser = argparse.ArgumentParser(prog="tightness", description="Tightness of simplicial complexes")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, needs_file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        if needs_file:
            p.add_argument("file", help="Complex file, or - for stdin")
        return p

    add("check", "Structure report")
    add("betti", "Betti numbers").add_argument("--reduced", action="store_true")
    add("sigma", "Sigma-vector")
    add("mu", "Mu-vector")
    add("tight", "Decide tightness").add_argument("--method", choices=["mu", "direct", "both"])
    add("stacked", "k-stackedness of a manifold with boundary").add_argument("-k", type=int, required=True)
    pair = add("stacked-pair", "k-stacked ball, optionally against a given boundary")
    pair.add_argument("-k", type=int, required=True)
    pair.add_argument("sphere", nargs="?", help="Expected boundary complex")
    add("conjecture-b", "Compare sigma_{k-1} with the conjectured formula").add_argument("-k", type=int, required=True)
    add("props", "Run the property battery")
    gen = add("gen", "Generate a complex", needs_file=False)
    gen.add_argument("family", choices=family_names())
    gen.add_argument("params", nargs="*")
    gen.add_argument("--out", help="Write the .cplx file here")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    try:
        limit = args.limit
        config = load_engine_config(
            field=args.field,
            method=getattr(args, "method", None),
            sigma_limit=limit,
            direct_limit=limit,
            seed=args.seed,
            json_output=args.json,
            mu_convention=args.mu_convention,
        )
        engine = TopologyEngine(config)
        out = _Output(args, engine)
        code = COMMANDS[args.command](args, engine, out)
        if args.command != "gen":
            out.emit()
        return code
    except SweepLimitError as exc:
        logger.error("%s", exc)
        return EXIT_SWEEP_LIMIT
    except InvariantViolation as exc:
        logger.error("internal error: %s", exc)
        return EXIT_INTERNAL_ERROR
    except TopologyError as exc:
        logger.error("%s", exc)
        return EXIT_INPUT_ERROR
    except ValidationError as exc:
        logger.error("invalid settings: %s", exc)
        return EXIT_INPUT_ERROR


def main() -> None:
    logging.basicConfig(level=logging.INFO, stream=sys.stderr)
    sys.exit(run())


if __name__ == "__main__":
    main()
