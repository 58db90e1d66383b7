"""
Command-line interface.

    semitoric-families polygon {validate,classify-corner,chop,unchop,flip,remove-cut,orbit-equal} ...
    semitoric-families classify --system SLUG [--t ...] [--transition-times] [--grid N]
    semitoric-families figures (--system SLUG | --reduced SLUG | --heights) ...
    semitoric-families heights {w2,s2xs2,compare} ...
    semitoric-families pipeline --n N --alpha P/Q --beta P/Q
    semitoric-families validate-all [--quick]

JSON results go to stdout or --output; CSV bundles go to --output-dir. Files are written
atomically. Exit codes: 0 success, 1 failed acceptance criterion, 2 invalid input,
3 infeasible or inadmissible operation, 4 numerical failure.
"""
import argparse
import csv
from fractions import Fraction
import inspect
import io
import json
import logging
import os
from pathlib import Path
import sys
import tempfile
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.inadmissible_error import InadmissibleError
from semitoric_families.exceptions.infeasible_error import InfeasibleError
from semitoric_families.exceptions.numerical_error import NumericalError
from semitoric_families.hirzebruch_pipeline import matches_standard, run_pipeline, transition_regimes_agree
from semitoric_families.invariants import height_s2xs2, height_w2, match_and_compare
from semitoric_families.model_systems import (
    FAMILY_CLASSES,
    HirzebruchFamily,
    SystemFamily,
    build_family,
    fixed_points,
    momentum_image,
)
from semitoric_families.models.height_comparison_model import CSV_HEADER as HEIGHTS_CSV_HEADER
from semitoric_families.rational_geometry import Point, parse_rat, point, point_to_json, rat_to_str
from semitoric_families.reduced_spaces import (
    PROFILE_CSV_HEADER,
    CylindricalReducedHamiltonian,
    profile_rows,
    reduced_critical_points,
    reduced_hamiltonian,
    reduced_section,
)
from semitoric_families.semitoric_polygon import (
    MarkedWeightedPolygon,
    classify_corner,
    corner_chop,
    corner_unchop,
    flip_all,
    orbit_equal,
    remove_cut,
    slope_change_audit,
    validate,
)
from semitoric_families.spectral_classification import (
    classify,
    classify_rank_one,
    hamiltonian_hopf_pattern,
    region_diagram,
    transition_times,
)
from semitoric_families.utils.constants import (
    EXIT_INFEASIBLE,
    EXIT_INVALID_INPUT,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_SUITE_FAILED,
    MONTE_CARLO_SEED,
    SYSTEM_SLUGS,
)
from semitoric_families.validation_suite import CRITERIA, first_failure, run_suite

__version__ = "1.0.0"

_LOGGER = logging.getLogger(__name__)

MOMENTUM_CSV_HEADER = ["t", "s1", "s2", "J", "H", "stratum"]
SECTION_CSV_HEADER = ["j", "R", "X_upper", "X_lower"]
REGION_CSV_HEADER = ["s1", "s2", "B", "C"]


# ----------------------------
# ARGUMENT TYPES
# ----------------------------

def _rational_point(text: str) -> Point:
    """Parse "x,y" into an exact point"""
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}")
    try:
        return point(parts[0], parts[1])
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_edge(text: str) -> Tuple[Point, Point]:
    ends = text.split(":")
    if len(ends) != 2:
        raise argparse.ArgumentTypeError(f"expected x1,y1:x2,y2 but got {text!r}")
    return _rational_point(ends[0]), _rational_point(ends[1])


def _rational(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> List[Fraction]:
    return [_rational(part) for part in text.split(",") if part.strip()]


def _float_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers but got {text!r}") from None


def _float_pair(text: str) -> Tuple[float, float]:
    values = _float_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected s1,s2 but got {text!r}")
    return values[0], values[1]


def _sign_list(text: str) -> List[int]:
    try:
        signs = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated signs but got {text!r}") from None
    if any(s not in (1, -1) for s in signs):
        raise argparse.ArgumentTypeError("signs must be +1 or -1")
    return signs


# ----------------------------
# OUTPUT
# ----------------------------

def _json_default(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Fraction):
        return rat_to_str(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, default=_json_default)


def write_atomic(path: Path, text: str) -> None:
    """Write text to path through a temporary file in the same directory"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    _LOGGER.debug(f"wrote {path}")


def write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    write_atomic(path, buffer.getvalue())


def _emit(args: argparse.Namespace, payload: Any) -> None:
    text = to_json(payload) + "\n"
    if args.output:
        write_atomic(Path(args.output), text)
    else:
        sys.stdout.write(text)


def _error(kind: str, reason: str, **extra: Any) -> None:
    sys.stderr.write(json.dumps({"error": kind, "reason": reason, **extra}, sort_keys=True, default=_json_default) + "\n")


def _tag(value: float) -> str:
    return f"{value:g}"


# ----------------------------
# RUN CONFIGURATION
# ----------------------------

def _load_polygon(source: str) -> MarkedWeightedPolygon:
    try:
        if source == "-":
            data = json.load(sys.stdin)
        else:
            with open(source, encoding="utf-8") as handle:
                data = json.load(handle)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed JSON in {source}: {exc}") from exc
    except OSError as exc:
        raise DomainError(f"cannot read {source}: {exc}") from exc
    return MarkedWeightedPolygon.from_json(data)


def _default_parameter(system: SystemIdEnum, name: str) -> Any:
    parameter = inspect.signature(FAMILY_CLASSES[system]).parameters.get(name)
    return None if parameter is None else parameter.default


def family_from_args(args: argparse.Namespace, slug: str) -> SystemFamily:
    """
    Build the family named by a CLI slug from the parameter flags.

    --gamma-fraction f sets gamma to f times the upper end of the family's gamma window.
    """
    system = SYSTEM_SLUGS[slug]
    parameters: Dict[str, Any] = {
        "alpha": args.alpha,
        "beta": args.beta,
        "gamma": args.gamma,
        "r1": args.r1,
        "r2": args.r2,
        "j0": args.j0,
    }
    if args.gamma_fraction is not None:
        cls = FAMILY_CLASSES[system]
        if not issubclass(cls, HirzebruchFamily):
            raise DomainError(f"--gamma-fraction needs a Hirzebruch family, {slug} has no gamma")
        if args.gamma is not None:
            raise DomainError("give either --gamma or --gamma-fraction, not both")
        alpha = args.alpha if args.alpha is not None else _default_parameter(system, "alpha")
        beta = args.beta if args.beta is not None else _default_parameter(system, "beta")
        _, upper = cls.gamma_window(float(alpha), float(beta))
        if not np.isfinite(upper):
            raise DomainError(f"{slug} has no bounded gamma window")
        parameters["gamma"] = args.gamma_fraction * upper
    family = build_family(system, **parameters)
    _LOGGER.info(f"{system.name} with {family.parameters()}")
    return family


def time_values(family: SystemFamily, args: argparse.Namespace) -> List[Tuple[float, ...]]:
    """Parameter values from --t (one-parameter families) or --s (two-parameter families)"""
    if family.arity == 1:
        if args.s:
            raise DomainError(f"{family.system_id.name} takes --t, not --s")
        return [family.times(t) for t in (args.t or [0.5])]
    if args.t:
        raise DomainError(f"{family.system_id.name} takes --s s1,s2, not --t")
    return [family.times(pair) for pair in (args.s or [(0.5, 0.5)])]


# ----------------------------
# COMMANDS
# ----------------------------

def cmd_polygon(args: argparse.Namespace) -> int:
    mp = _load_polygon(args.input)
    status = EXIT_OK
    if args.action == "validate":
        report = validate(mp)
        payload = report.to_dict()
        if report.valid:
            payload["slope_audit"] = slope_change_audit(mp).to_dict()
        else:
            status = EXIT_INVALID_INPUT
    elif args.action == "classify-corner":
        payload = {"vertex": point_to_json(args.vertex), "class": classify_corner(mp, args.vertex).name}
    elif args.action == "chop":
        payload = corner_chop(mp, args.vertex, args.lam).to_json()
    elif args.action == "unchop":
        payload = corner_unchop(mp, args.edge, args.lam).to_json()
    elif args.action == "flip":
        if len(args.flips) != len(mp.marks):
            raise DomainError(f"need {len(mp.marks)} flip sign(s), got {len(args.flips)}")
        payload = flip_all(mp, args.flips).to_json()
    elif args.action == "remove-cut":
        payload = remove_cut(mp, args.index, args.sign).to_json()
    else:
        payload = orbit_equal(mp, _load_polygon(args.other))
    _emit(args, payload)
    return status


def _rank_one_summary(family: SystemFamily, params: Tuple[float, ...], levels: Sequence[float]) -> List[Dict[str, Any]]:
    summary = []
    for j in levels:
        rh = reduced_hamiltonian(family, params, j)
        counts: Dict[str, int] = {}
        for p in reduced_critical_points(rh):
            name = classify_rank_one(family, params, j, p).name
            counts[name] = counts.get(name, 0) + 1
        summary.append({"times": list(params), "j": j, "types": counts})
    return summary


def cmd_classify(args: argparse.Namespace) -> int:
    family = family_from_args(args, args.system)
    report: Dict[str, Any] = {
        "system": family.system_id.name,
        "parameters": family.parameters(),
        "verdicts": [],
        "critical_sets": [],
    }
    for params in time_values(family, args):
        inventory = fixed_points(family, params)
        labels = [args.point] if args.point else inventory.labels
        if args.point and args.point not in inventory.labels:
            raise DomainError(f"no fixed point {args.point} at {params}; inventory has {inventory.labels}")
        for label in labels:
            report["verdicts"].append(classify(family, params, label).to_dict())
        report["critical_sets"].extend(c.to_dict() for c in inventory.critical_sets)
        if args.rank_one_j:
            report.setdefault("rank_one", []).extend(_rank_one_summary(family, params, args.rank_one_j))

    if args.transition_times:
        times = transition_times(family)
        report["transition_times"] = times.to_dict()
        window = min(0.05, times.t_minus / 2, (times.t_plus - times.t_minus) / 2, (1.0 - times.t_plus) / 2)
        report["hamiltonian_hopf"] = {
            name: hamiltonian_hopf_pattern(family, times.label, t, window=window)
            for name, t in (("t_minus", times.t_minus), ("t_plus", times.t_plus))
        }

    if args.grid:
        diagram = region_diagram(family, args.grid)
        path = Path(args.output_dir) / f"regions_{args.system}.csv"
        write_csv(path, REGION_CSV_HEADER, diagram.csv_rows())
        report["regions"] = {**diagram.to_dict(), "csv": str(path)}
    _emit(args, report)
    return EXIT_OK


def _momentum_figures(args: argparse.Namespace, out: Path) -> List[str]:
    family = family_from_args(args, args.system)
    files = []
    for params in time_values(family, args):
        image = momentum_image(family, params, args.resolution)
        tag = "_".join(_tag(v) for v in params)
        path = out / f"momentum_{args.system}_{'t' if family.arity == 1 else 's'}{tag}.csv"
        write_csv(path, MOMENTUM_CSV_HEADER, image.csv_rows())
        files.append(str(path))
    return files


def _reduced_figures(args: argparse.Namespace, out: Path) -> List[str]:
    family = family_from_args(args, args.reduced)
    if not isinstance(family, HirzebruchFamily):
        raise DomainError(f"reduced sections need a W1 or W2 family, got {args.reduced}")
    if not args.j:
        raise DomainError("--reduced needs --j levels")
    params = time_values(family, args)[0]
    files = []
    for j in args.j:
        section = reduced_section(family, j, args.count)
        path = out / f"section_{args.reduced}_j{_tag(j)}.csv"
        write_csv(path, SECTION_CSV_HEADER, section.csv_rows())
        files.append(str(path))
        rh = reduced_hamiltonian(family, params, j)
        if isinstance(rh, CylindricalReducedHamiltonian):
            path = out / f"profile_{args.reduced}_j{_tag(j)}.csv"
            write_csv(path, PROFILE_CSV_HEADER, profile_rows(rh, args.count))
            files.append(str(path))
    return files


def _height_figures(args: argparse.Namespace, out: Path) -> List[str]:
    r1 = args.r1 if args.r1 is not None else 1.0
    r2 = args.r2 if args.r2 is not None else 2.0
    comparison = match_and_compare(r1, r2, oracle_samples=args.oracle_samples, seed=args.seed)
    path = out / f"heights_R1_{_tag(r1)}_R2_{_tag(r2)}.csv"
    write_csv(path, HEIGHTS_CSV_HEADER, comparison.csv_rows())
    return [str(path)]


def cmd_figures(args: argparse.Namespace) -> int:
    out = Path(args.output_dir)
    if args.system:
        files = _momentum_figures(args, out)
    elif args.reduced:
        files = _reduced_figures(args, out)
    else:
        files = _height_figures(args, out)
    _emit(args, {"files": files})
    return EXIT_OK


def cmd_heights(args: argparse.Namespace) -> int:
    if args.target == "w2":
        result = height_w2(
            args.alpha if args.alpha is not None else 1.0,
            args.beta if args.beta is not None else 1.0,
            args.gamma if args.gamma is not None else 0.45,
            audit=args.audit,
            oracle_samples=args.oracle_samples,
            seed=args.seed,
        )
    elif args.target == "s2xs2":
        result = height_s2xs2(
            args.r1 if args.r1 is not None else 1.0,
            args.r2 if args.r2 is not None else 2.0,
            oracle_samples=args.oracle_samples,
            seed=args.seed,
        )
    else:
        result = match_and_compare(
            args.r1 if args.r1 is not None else 1.0,
            args.r2 if args.r2 is not None else 2.0,
            alpha=args.alpha,
            beta=args.beta,
            oracle_samples=args.oracle_samples,
            seed=args.seed,
        )
    _emit(args, result.to_dict())
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    result = run_pipeline(args.n, args.alpha, args.beta, args.lambdas, args.y)
    payload = result.to_dict()
    payload["matches_standard"] = matches_standard(result.triple, args.n, args.alpha, args.beta)
    payload["transition_regimes_agree"] = transition_regimes_agree(result.triple)
    if args.steps:
        write_atomic(Path(args.steps), "".join(step.to_json_line() + "\n" for step in result.steps))
        payload["steps"] = args.steps
    _emit(args, payload)
    return EXIT_OK


def cmd_validate_all(args: argparse.Namespace) -> int:
    results = run_suite(quick=args.quick, names=args.only)
    failure = first_failure(results)
    _emit(args, {"passed": failure is None, "criteria": [r.to_dict() for r in results]})
    if failure is not None:
        sys.stderr.write(f"criterion failed: {failure.name}: {failure.detail}\n")
        return EXIT_SUITE_FAILED
    return EXIT_OK


# ----------------------------
# PARSER
# ----------------------------

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    common.add_argument("-o", "--output", help="write the JSON result here instead of stdout")
    return common


def _family_options() -> argparse.ArgumentParser:
    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--alpha", type=float)
    family.add_argument("--beta", type=float)
    family.add_argument("--gamma", type=float)
    family.add_argument("--gamma-fraction", type=float, help="gamma as a fraction of the window's upper end")
    family.add_argument("--R1", dest="r1", type=float)
    family.add_argument("--R2", dest="r2", type=float)
    family.add_argument("--j0", type=float)
    family.add_argument("--t", type=_float_list, help="comma-separated times")
    family.add_argument("--s", type=_float_pair, action="append", help="s1,s2 (repeatable)")
    family.add_argument("--output-dir", default=".", help="directory for CSV bundles")
    return family


def _add_polygon_parser(commands: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    polygon = commands.add_parser("polygon", help="marked semitoric polygon algebra")
    actions = polygon.add_subparsers(dest="action", required=True)

    def action(name: str, help_text: str) -> argparse.ArgumentParser:
        parser = actions.add_parser(name, parents=[common], help=help_text)
        parser.add_argument("input", help="polygon JSON file, or - for stdin")
        parser.set_defaults(handler=cmd_polygon)
        return parser

    action("validate", "check corners and marks")
    action("classify-corner", "Delzant, Hidden, Fake or Invalid").add_argument("--vertex", type=_rational_point, required=True)
    chop = action("chop", "semitoric corner chop")
    chop.add_argument("--vertex", type=_rational_point, required=True)
    chop.add_argument("--lambda", dest="lam", type=_rational, required=True)
    unchop = action("unchop", "inverse corner chop along an edge")
    unchop.add_argument("--edge", type=_rational_edge, required=True, help="x1,y1:x2,y2")
    unchop.add_argument("--lambda", dest="lam", type=_rational, required=True)
    action("flip", "flip cuts").add_argument("--flips", type=_sign_list, required=True, help="one of +1/-1 per mark")
    remove = action("remove-cut", "forget a mark with its cut pointing the required way")
    remove.add_argument("--index", type=int, required=True)
    remove.add_argument("--sign", type=int, choices=(1, -1), required=True)
    action("orbit-equal", "compare two representatives").add_argument("other", help="second polygon JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semitoric-families", description="Explicit semitoric families")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    common = _common_options()
    family = _family_options()
    slugs = sorted(SYSTEM_SLUGS)

    classify_parser = commands.add_parser("classify", parents=[common, family], help="fixed-point and rank-one types")
    classify_parser.add_argument("--system", choices=slugs, required=True)
    classify_parser.add_argument("--point", help="classify only this fixed point")
    classify_parser.add_argument("--transition-times", action="store_true")
    classify_parser.add_argument("--rank-one-j", type=_float_list, help="J-levels for the rank-one sweep")
    classify_parser.add_argument("--grid", type=int, help="region diagram points per axis (w2-2param)")
    classify_parser.set_defaults(handler=cmd_classify)

    figures = commands.add_parser("figures", parents=[common, family], help="CSV data for plots")
    target = figures.add_mutually_exclusive_group(required=True)
    target.add_argument("--system", choices=slugs, help="momentum images")
    target.add_argument("--reduced", choices=slugs, help="reduced-space sections and profiles")
    target.add_argument("--heights", action="store_true", help="h1 curves against gamma")
    figures.add_argument("--resolution", type=int, default=24)
    figures.add_argument("--j", type=_float_list, help="J-levels for --reduced")
    figures.add_argument("--count", type=int, default=200, help="samples per section or profile")
    figures.add_argument("--oracle-samples", type=int, default=0)
    figures.add_argument("--seed", type=int, default=MONTE_CARLO_SEED)
    figures.set_defaults(handler=cmd_figures)

    heights = commands.add_parser("heights", parents=[common, family], help="height invariants")
    heights.add_argument("target", choices=("w2", "s2xs2", "compare"))
    heights.add_argument("--audit", action="store_true", help="integrate the second fiber directly (w2)")
    heights.add_argument("--oracle-samples", type=int, default=0)
    heights.add_argument("--seed", type=int, default=MONTE_CARLO_SEED)
    heights.set_defaults(handler=cmd_heights)

    pipeline = commands.add_parser("pipeline", parents=[common], help="Hirzebruch chop/unchop pipeline")
    pipeline.add_argument("--n", type=int, required=True)
    pipeline.add_argument("--alpha", type=_rational, required=True)
    pipeline.add_argument("--beta", type=_rational, required=True)
    pipeline.add_argument("--lambdas", type=_rational_list)
    pipeline.add_argument("--y", type=_rational)
    pipeline.add_argument("--steps", help="write the step log here as JSON lines")
    pipeline.set_defaults(handler=cmd_pipeline)

    suite = commands.add_parser("validate-all", parents=[common], help="run the acceptance suite")
    suite.add_argument("--quick", action="store_true")
    suite.add_argument("--only", action="append", choices=[name for name, _, _ in CRITERIA])
    suite.set_defaults(handler=cmd_validate_all)

    _add_polygon_parser(commands, common)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except InfeasibleError as exc:
        _error("infeasible", exc.obstruction, stage=exc.stage)
        return EXIT_INFEASIBLE
    except InadmissibleError as exc:
        _error("inadmissible", str(exc))
        return EXIT_INFEASIBLE
    except NumericalError as exc:
        _error("numerical", str(exc), diagnostics=exc.diagnostics)
        return EXIT_NUMERICAL
    except DomainError as exc:
        _error("input", str(exc))
        return EXIT_INVALID_INPUT
