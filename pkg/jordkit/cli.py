"""
cli.py

The ``jord`` command line. Every subcommand reads its inputs, runs one
jordkit operation and prints the outcome as text or JSON on stdout; logs
go to stderr.

Exit codes: 0 when nothing failed, 1 on a mathematical failure, 2 on
usage, input or file errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from jordkit.algebra import (
    GradedSubspace,
    SuperAlgebra,
    SuperForm,
    make_bilinear_jordan,
    make_dt,
    make_grassmann,
    make_k3,
    make_k10_table,
    make_k10_tensor,
    make_superform_algebra,
)
from jordkit.claims import SuiteOptions, run_suite
from jordkit.conversions import (
    algebra_to_dict,
    dump_algebra,
    load_algebra,
    load_map,
    load_matrix,
    matrix_to_dict,
    subspace_to_dict,
)
from jordkit.errors import NonSquareScalar, VerificationError
from jordkit.fixtures import FIXTURE_DIR
from jordkit.identities import check_envelope_jordan, check_jordan_superalgebra
from jordkit.linalg import Matrix
from jordkit.morphisms import (
    OrthogonalMap,
    WreathElement,
    factor_orthogonal,
    image_subspace,
    is_homomorphism,
    phi,
    standard_iso,
)
from jordkit.report import IdentityReport
from jordkit.subalgebras import (
    CONJUGATION_KINDS,
    KINDS,
    conjugation_witness,
    maximal_subalgebra,
    maximality_probe,
    span_closure,
    structure_report,
)

logger = logging.getLogger(__name__)

DEFAULT_SEED = 1
DEFAULT_TRIALS = 200
DEFAULT_ENVELOPE_DEGREE = 3
DEFAULT_JOBS = 1

FORMATS = ("text", "json")
BUILTINS = ("k3", "dt", "k10", "k10-tensor", "grassmann", "bilinear", "superform")

_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


@dataclass(frozen=True)
class RunConfig:
    """
    Everything one ``jord`` invocation needs, built from the parsed flags.

    :ivar command: Top-level subcommand.
    :vartype command: str
    :ivar action: Second-level subcommand of ``iso``, ``aut`` and ``sub``.
    :vartype action: Optional[str]
    """

    command: str
    action: Optional[str] = None
    algebra: Optional[Path] = None
    map_path: Optional[Path] = None
    source: Optional[Path] = None
    target: Optional[Path] = None
    matrix: Optional[Path] = None
    builtin: Optional[str] = None
    t: Optional[str] = None
    n: int = 3
    gram: Optional[Path] = None
    odd_gram: Optional[Path] = None
    out: Optional[Path] = None
    kind: Optional[str] = None
    generators: Optional[str] = None
    f: Optional[str] = None
    g: Optional[str] = None
    swap: bool = False
    probe: bool = False
    envelope: Optional[int] = None
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    envelope_degree: int = DEFAULT_ENVELOPE_DEGREE
    jobs: int = DEFAULT_JOBS
    output_format: str = "text"
    fixtures: Path = FIXTURE_DIR
    verbosity: int = 0

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> RunConfig:
        values = vars(namespace)
        known = {name for name in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in values.items() if k in known and v is not None})

    def suite_options(self) -> SuiteOptions:
        return SuiteOptions(
            seed=self.seed,
            trials=self.trials,
            envelope_degree=self.envelope_degree,
            jobs=self.jobs,
            fixtures=self.fixtures,
        )


#  Output


def _emit(config: RunConfig, text: str, data: Any):
    if config.output_format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _reports_text(reports: Sequence[IdentityReport]) -> str:
    return "\n".join(report.summary() for report in reports)


def _matrix_text(m: Matrix) -> str:
    return "\n".join(" ".join(row) for row in m.to_strings())


def _subspace_text(s: GradedSubspace) -> str:
    lines = [f"{s} dims {s.dims}"]
    lines.extend(f"  {x}" for x in s.basis())
    return "\n".join(lines)


#  Commands


def _builtin_algebra(config: RunConfig) -> SuperAlgebra:
    name = config.builtin
    if name == "k3":
        return make_k3()
    if name == "dt":
        if config.t is None:
            raise ValueError("builtin dt needs --t")
        return make_dt(config.t)
    if name == "k10":
        return make_k10_table()
    if name == "k10-tensor":
        return make_k10_tensor()
    if name == "grassmann":
        return make_grassmann(config.n)
    if name == "bilinear":
        gram = load_matrix(config.gram) if config.gram else Matrix.identity(config.n)
        return make_bilinear_jordan(gram)
    even = load_matrix(config.gram) if config.gram else Matrix.identity(2)
    odd = (
        load_matrix(config.odd_gram)
        if config.odd_gram
        else Matrix.from_rows([[0, 1], [-1, 0]])
    )
    return make_superform_algebra(SuperForm(even, odd))


def cmd_builtin(config: RunConfig) -> int:
    a = _builtin_algebra(config)
    if config.out:
        dump_algebra(a, config.out)
        logger.info("wrote %s to %s", a.name, config.out)
    else:
        print(json.dumps(algebra_to_dict(a), indent=2))
    return 0


def cmd_check(config: RunConfig) -> int:
    a = load_algebra(config.algebra)
    reports = check_jordan_superalgebra(a, config.jobs)
    if config.envelope:
        reports.append(
            check_envelope_jordan(
                a, config.envelope, config.trials, config.seed, config.jobs
            )
        )
    passed = all(report.passed for report in reports)
    data = {
        "algebra": a.name,
        "passed": passed,
        "reports": [report.to_dict() for report in reports],
    }
    _emit(config, _reports_text(reports), data)
    return 0 if passed else 1


def cmd_iso(config: RunConfig) -> int:
    source = load_algebra(config.source)
    target = load_algebra(config.target)
    m = load_map(source, target, config.map_path)
    report = is_homomorphism(m, config.jobs)
    determinant = m.matrix.determinant() if m.matrix.is_square else 0
    passed = report.passed and determinant != 0
    text = f"{report.summary()}\ndeterminant: {determinant}"
    data = {
        "passed": passed,
        "determinant": str(determinant),
        "homomorphism": report.to_dict(),
    }
    _emit(config, text, data)
    return 0 if passed else 1


def cmd_aut(config: RunConfig) -> int:
    if config.action == "phi":
        w = WreathElement.from_entries(config.f, config.g, config.swap)
        m = phi(w)
        _emit(config, _matrix_text(m.matrix), matrix_to_dict(m.matrix))
        return 0
    m = OrthogonalMap(load_matrix(config.matrix))
    try:
        w = factor_orthogonal(m)
    except NonSquareScalar as error:
        _emit(config, str(error), {"non_square": str(error.gamma)})
        return 1
    data = {
        "f": matrix_to_dict(w.f),
        "g": matrix_to_dict(w.g),
        "swap": w.swap,
    }
    text = f"f:\n{_matrix_text(w.f)}\ng:\n{_matrix_text(w.g)}\nswap: {w.swap}"
    _emit(config, text, data)
    return 0


def _generators(a: SuperAlgebra, text: Optional[str]):
    if not text:
        raise ValueError("--gens needs at least one element")
    return [a.parse_element(token) for token in text.split(",") if token.strip()]


def _sub_closure(config: RunConfig) -> int:
    a = load_algebra(config.algebra)
    s = span_closure(a, _generators(a, config.generators))
    _emit(config, _subspace_text(s), subspace_to_dict(s))
    return 0


def _sub_probe(config: RunConfig) -> int:
    a = load_algebra(config.algebra)
    s = span_closure(a, _generators(a, config.generators))
    result = maximality_probe(s, config.trials, config.seed, config.jobs)
    text = f"{_subspace_text(s)}\n{result.verdict} after {result.checked} adjunctions"
    if result.witness is not None:
        text += f"\nwitness {result.witness}\nsaturation {result.saturation}"
    _emit(config, text, {"subspace": subspace_to_dict(s), "probe": result.to_dict()})
    return 0


def _sub_maximal(config: RunConfig) -> int:
    b = maximal_subalgebra(config.kind)
    data: dict[str, Any] = {"subspace": subspace_to_dict(b)}
    text = _subspace_text(b)
    if not config.probe:
        _emit(config, text, data)
        return 0
    result = maximality_probe(b, config.trials, config.seed, config.jobs)
    data["probe"] = result.to_dict()
    text += f"\n{result.verdict} after {result.checked} adjunctions"
    _emit(config, text, data)
    return 0 if result.maximal else 1


def _sub_structure(config: RunConfig) -> int:
    report = structure_report(config.kind)
    text = "\n".join(
        f"{claim.status.upper():<10} {claim.name}  {claim.detail}"
        for claim in report.claims
    )
    _emit(config, text, report.to_dict())
    return 0 if report.passed else 1


def _sub_conjugate(config: RunConfig) -> int:
    w = conjugation_witness(config.kind)
    image = image_subspace(standard_iso().compose(w), maximal_subalgebra(config.kind))
    text = f"{_matrix_text(w.matrix)}\nimage {_subspace_text(image)}"
    data = {"matrix": matrix_to_dict(w.matrix), "image": subspace_to_dict(image)}
    _emit(config, text, data)
    return 0


_SUB_ACTIONS: dict[str, Callable[[RunConfig], int]] = {
    "closure": _sub_closure,
    "probe": _sub_probe,
    "maximal": _sub_maximal,
    "structure": _sub_structure,
    "conjugate": _sub_conjugate,
}


def cmd_sub(config: RunConfig) -> int:
    return _SUB_ACTIONS[config.action](config)


def cmd_verify(config: RunConfig) -> int:
    result = run_suite(config.suite_options())
    lines = [
        f"{claim.status.upper():<10} {claim.name}  {claim.detail}"
        for claim in result.claims
    ]
    lines.append(f"{len(result.claims)} claims, {len(result.deviations)} deviations")
    if result.deviations:
        lines.append("deviations:")
        lines.extend(f"  {c.name}: {c.detail}" for c in result.deviations)
    _emit(config, "\n".join(lines), result.to_dict())
    return 0 if result.passed else 1


COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "builtin": cmd_builtin,
    "check": cmd_check,
    "iso": cmd_iso,
    "aut": cmd_aut,
    "sub": cmd_sub,
    "verify-paper": cmd_verify,
    "verify": cmd_verify,
}


#  Parsing

# Options whose values are scalars or entry lists and may start with "-".
SCALAR_OPTIONS = ("--t", "--f", "--g")

_NEGATIVE_VALUE = re.compile(r"-[\d./]")


def join_negative_values(argv: Sequence[str]) -> list[str]:
    """
    Rewrites ``--t -3/2`` as ``--t=-3/2`` for the scalar options, which
    argparse would otherwise read as a missing value followed by a flag.
    """
    joined: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in SCALAR_OPTIONS:
            value = next(tokens, None)
            if value is not None and _NEGATIVE_VALUE.match(value):
                joined.append(f"{token}={value}")
                continue
            joined.append(token)
            if value is not None:
                joined.append(value)
            continue
        joined.append(token)
    return joined


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument(
        "--format", dest="output_format", choices=FORMATS, default=argparse.SUPPRESS
    )
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--trials", type=int, default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument(
        "--envelope-degree",
        dest="envelope_degree",
        type=int,
        default=argparse.SUPPRESS,
    )
    common.add_argument("--fixtures", type=Path, default=argparse.SUPPRESS)
    common.add_argument(
        "-v", "--verbose", dest="verbosity", action="count", default=argparse.SUPPRESS
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    The ``jord`` parser. Long options are never abbreviated, so ``--f``
    cannot be taken for ``--format`` or ``--fixtures``.
    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="jord",
        description="Exact verification of finite-dimensional Jordan superalgebras.",
        parents=[common],
        allow_abbrev=False,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def add(actions, name: str, **kwargs) -> argparse.ArgumentParser:
        return actions.add_parser(name, parents=[common], allow_abbrev=False, **kwargs)

    builtin = add(commands, "builtin", help="emit an algebra")
    builtin.add_argument("builtin", choices=BUILTINS)
    builtin.add_argument("--t", help="parameter of D_t, as p/q")
    builtin.add_argument("--n", type=int, default=3)
    builtin.add_argument("--gram", type=Path, help="matrix file of the (even) form")
    builtin.add_argument("--odd-gram", dest="odd_gram", type=Path)
    builtin.add_argument("--out", type=Path)

    check = add(commands, "check", help="check the axioms")
    check.add_argument("algebra", type=Path)
    check.add_argument("--envelope", type=int, metavar="N")

    iso = add(commands, "iso", help="verify a map")
    iso_actions = iso.add_subparsers(dest="action", required=True)
    verify_map = add(iso_actions, "verify")
    verify_map.add_argument("map_path", type=Path)
    verify_map.add_argument("--from", dest="source", type=Path, required=True)
    verify_map.add_argument("--to", dest="target", type=Path, required=True)

    aut = add(commands, "aut", help="automorphisms")
    aut_actions = aut.add_subparsers(dest="action", required=True)
    aut_phi = add(aut_actions, "phi")
    aut_phi.add_argument("--f", required=True, help='row-major "a,b,c,d"')
    aut_phi.add_argument("--g", required=True, help='row-major "a,b,c,d"')
    aut_phi.add_argument("--swap", action="store_true")
    aut_factor = add(aut_actions, "factor")
    aut_factor.add_argument("--matrix", type=Path, required=True)

    sub = add(commands, "sub", help="subalgebras of K10")
    sub_actions = sub.add_subparsers(dest="action", required=True)
    for name in ("closure", "probe"):
        action = add(sub_actions, name)
        action.add_argument("algebra", type=Path)
        action.add_argument(
            "--gens", dest="generators", required=True, help='e.g. "e,f,p1,q1"'
        )
    maximal = add(sub_actions, "maximal")
    maximal.add_argument("kind", choices=KINDS)
    maximal.add_argument("--probe", action="store_true")
    structure = add(sub_actions, "structure")
    structure.add_argument("kind", choices=KINDS)
    conjugate = add(sub_actions, "conjugate")
    conjugate.add_argument("kind", choices=CONJUGATION_KINDS)

    add(commands, "verify-paper", aliases=["verify"], help="run the full suite")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    if argv is None:
        argv = sys.argv[1:]
    namespace = build_parser().parse_args(join_negative_values(argv))
    return RunConfig.from_namespace(namespace)


def _configure_logging(verbosity: int):
    level = _LOG_LEVELS[min(verbosity, len(_LOG_LEVELS) - 1)]
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    config = parse_args(argv)
    _configure_logging(config.verbosity)
    if config.trials < 0 or config.jobs < 1:
        print("error: --trials must be >= 0 and --jobs >= 1", file=sys.stderr)
        return 2
    try:
        return COMMANDS[config.command](config)
    except VerificationError as error:
        print(error, file=sys.stderr)
        return 1
    except (ValueError, OSError, KeyError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
