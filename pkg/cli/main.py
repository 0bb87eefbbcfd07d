"""fusionring command line.

    fusionring <weights|fuse|verlinde|smatrix|check|decompose> TYPE -k LEVEL
               [--genus G] [--weights "1,0;0,1"] [--format json|csv]
               [--tol-int EPS] [--exhaustive] [--threads N] [--verbose]

Documents go to stdout, diagnostics to stderr.
"""
import argparse
import sys
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, ValidationError

from cli.schemas import (
    CheckDocument,
    Constituent,
    DecomposeDocument,
    FusionDocument,
    JobConfig,
    SMatrixDocument,
    VerificationItem,
    VerlindeDocument,
    WeightsDocument,
)
from config.constants import (
    COMMANDS,
    EXIT_CAP_EXCEEDED,
    EXIT_INTEGRALITY,
    EXIT_INVALID_INPUT,
    EXIT_INVARIANT_FAILURE,
    EXIT_OK,
    OUTPUT_FORMATS,
)
from config.settings import LOG_LEVEL, TOL_UNITARITY
from fusion.folding import alcove_fold, kac_walton_product
from fusion.fusion_ring import fusion_table, verlinde_trace
from level.level_data import LevelData, level_data
from modular.s_matrix import quantum_dimensions, s_matrix
from roots.representations import tensor_decompose
from utils.errors import (
    FusionRingError,
    GroupTooLarge,
    IntegralityViolation,
    InvalidAffineType,
    InvalidWeight,
    WrongTypeClass,
)
from utils.logger import log, setup_logger
from validation.invariants import InvariantSuite, run_suite

_EXIT_CODES = (
    ((InvalidAffineType, InvalidWeight, WrongTypeClass), EXIT_INVALID_INPUT),
    ((GroupTooLarge,), EXIT_CAP_EXCEEDED),
    ((IntegralityViolation,), EXIT_INTEGRALITY),
)


def exit_code_for(error: FusionRingError) -> int:
    for classes, code in _EXIT_CODES:
        if isinstance(error, classes):
            return code
    return EXIT_INVARIANT_FAILURE


def parse_weight_list(text: Optional[str], rank: Optional[int] = None) -> List[List[int]]:
    """Parse "1,0;0,1" into [[1, 0], [0, 1]].

    Raises:
        InvalidWeight: a component is not an integer, or a weight length differs from rank
    """
    if text is None or not text.strip():
        return []
    weights = []
    for chunk in text.split(";"):
        try:
            weight = [int(v) for v in chunk.split(",")]
        except ValueError:
            raise InvalidWeight(f"cannot parse weight '{chunk.strip()}'")
        if rank is not None and len(weight) != rank:
            raise InvalidWeight(f"weight '{chunk.strip()}' has {len(weight)} entries, rank is {rank}")
        weights.append(weight)
    return weights


def _parse_args(argv: Optional[List[str]]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="fusionring",
        description="Level-k fusion rings of affine Kac-Moody algebras X_N^(r).",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("affine_type", metavar="TYPE", help='Cartan label such as "C2~1" or "A_4^(2)"')
    parser.add_argument("-k", "--level", type=int, required=True, dest="k")
    parser.add_argument("--genus", type=int, default=0)
    parser.add_argument("--weights", default=None, help='semicolon-separated weights, e.g. "1,0;0,1"')
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="json", dest="output_format")
    parser.add_argument("--tol-int", type=float, default=None, dest="tol_int")
    parser.add_argument("--fundamental-set-cap", type=int, default=None, dest="fundamental_set_cap")
    parser.add_argument("--exhaustive", action="store_true")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--verbose", action="store_true")
    return parser.parse_args(argv)


def _job_config(args: argparse.Namespace) -> JobConfig:
    values = {
        "command": args.command,
        "affine_type": args.affine_type,
        "k": args.k,
        "output_format": args.output_format,
        "genus": args.genus,
        "exhaustive": args.exhaustive,
        "verbose": args.verbose,
    }
    for name in ("tol_int", "fundamental_set_cap", "threads"):
        if getattr(args, name) is not None:
            values[name] = getattr(args, name)
    return JobConfig(**values)


def _labels(weights) -> List[List[int]]:
    return [list(w) for w in weights]


def cmd_weights(cfg: JobConfig, ld: LevelData) -> WeightsDocument:
    return WeightsDocument(
        affine_type=str(ld.affine_type),
        k=ld.k,
        dual_coxeter=ld.affine.dual_coxeter,
        norm_const=ld.norm_const,
        weights=_labels(ld.P_k),
        dual_weights=None if ld.P_k_dual is None else _labels(ld.P_k_dual),
        point_labels=[list(t.label) for t in ld.sigma_k],
        phases=[[str(p) for p in t.phase_covector] for t in ld.sigma_k],
    )


def cmd_fuse(cfg: JobConfig, ld: LevelData) -> FusionDocument:
    table = fusion_table(ld, threads=cfg.threads, tolerance=cfg.tol_int)
    suite = InvariantSuite(ld, exhaustive=cfg.exhaustive, threads=cfg.threads, tol_int=cfg.tol_int)
    report = suite.run_fusion_checks(table)
    if not report.passed:
        log.error(f"fusion table verification failed:\n{report.render()}")
    return FusionDocument(
        affine_type=str(ld.affine_type),
        k=ld.k,
        weights=_labels(table.weights),
        entries=table.nonzero_entries(),
        max_residual=table.residual,
        verification=_items(report),
        warnings=list(table.warnings),
    )


def cmd_verlinde(cfg: JobConfig, ld: LevelData) -> VerlindeDocument:
    weights = cfg.weights
    result = verlinde_trace(ld, cfg.genus, [tuple(w) for w in weights], tolerance=cfg.tol_int)
    return VerlindeDocument(
        affine_type=str(ld.affine_type),
        k=ld.k,
        genus=cfg.genus,
        weights=weights,
        value_integer=result.value,
        raw_complex=(result.raw.real, result.raw.imag),
        residual=result.residual,
        integral=result.integral,
    )


def cmd_smatrix(cfg: JobConfig, ld: LevelData) -> SMatrixDocument:
    S = s_matrix(ld.affine_type, ld.k)
    dims = None
    if S.source == S.target and S.source.uses_weight_torus:
        dims = quantum_dimensions(S)
    return SMatrixDocument(
        source=str(S.source),
        target=str(S.target),
        k=S.k,
        rows=_labels(S.rows),
        cols=_labels(S.cols),
        entries=[[(float(z.real), float(z.imag)) for z in row] for row in S.entries],
        tolerance=TOL_UNITARITY,
        unitarity_residual=S.unitarity_residual(),
        quantum_dimensions=dims,
    )


def cmd_check(cfg: JobConfig, ld: LevelData) -> CheckDocument:
    report = run_suite(
        ld, exhaustive=cfg.exhaustive, threads=cfg.threads, tol_int=cfg.tol_int,
        fundamental_set_cap=cfg.fundamental_set_cap,
    )
    print(report.render(), file=sys.stderr)
    return CheckDocument(
        affine_type=str(ld.affine_type), k=ld.k, passed=report.passed, checks=_items(report)
    )


def cmd_decompose(cfg: JobConfig, ld: LevelData) -> DecomposeDocument:
    if len(cfg.weights) != 2:
        raise InvalidWeight(f'decompose needs exactly two weights "λ;μ", got {len(cfg.weights)}')
    lam, mu = (tuple(w) for w in cfg.weights)
    ld.index(lam)
    ld.index(mu)

    classical = []
    removed = []
    landed = set()
    for xi, mult in tensor_decompose(ld.rs, lam, mu).items():
        fold = alcove_fold(ld, xi)
        if fold.is_wall:
            removed.append(list(xi))
            classical.append(Constituent(weight=list(xi), multiplicity=mult))
        else:
            landed.add(fold.weight)
            classical.append(Constituent(
                weight=list(xi), multiplicity=mult, folded_to=list(fold.weight), sign=fold.sign
            ))

    product = kac_walton_product(ld, lam, mu)
    fusion = [Constituent(weight=list(nu), multiplicity=c, folded_to=list(nu), sign=1) for nu, c in sorted(product.items())]
    cancelled = [list(nu) for nu in sorted(landed) if nu not in product]
    return DecomposeDocument(
        affine_type=str(ld.affine_type),
        k=ld.k,
        lam=list(lam),
        mu=list(mu),
        classical=classical,
        fusion=fusion,
        removed=removed,
        cancelled=cancelled,
    )


def _items(report) -> List[VerificationItem]:
    items = []
    for c in report.checks:
        status = "PASS" if c.passed else ("WARN" if c.level == "WARN" else "FAIL")
        items.append(VerificationItem(name=c.name, status=status, detail=c.detail))
    return items


COMMAND_HANDLERS: Dict[str, Callable[[JobConfig, LevelData], BaseModel]] = {
    "weights": cmd_weights,
    "fuse": cmd_fuse,
    "verlinde": cmd_verlinde,
    "smatrix": cmd_smatrix,
    "check": cmd_check,
    "decompose": cmd_decompose,
}


def emit(document: BaseModel, output_format: str, stream=None) -> None:
    stream = sys.stdout if stream is None else stream
    if output_format == "csv":
        document.to_frame().to_csv(stream, index=False)
    else:
        stream.write(document.model_dump_json(indent=2))
        stream.write("\n")


def run(cfg: JobConfig, stream=None) -> int:
    """Execute one job; returns the process exit code."""
    try:
        ld = level_data(cfg.affine_type, cfg.k)
        for w in cfg.weights:
            if len(w) != ld.rank:
                raise InvalidWeight(f"weight {w} has {len(w)} entries, rank is {ld.rank}")
        document = COMMAND_HANDLERS[cfg.command](cfg, ld)
    except FusionRingError as e:
        log.error(f"{cfg.command} {cfg.affine_type} k={cfg.k}: {e}")
        return exit_code_for(e)

    emit(document, cfg.output_format, stream)
    if isinstance(document, CheckDocument) and not document.passed:
        return EXIT_INVARIANT_FAILURE
    if isinstance(document, FusionDocument) and any(v.status == "FAIL" for v in document.verification):
        return EXIT_INVARIANT_FAILURE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID_INPUT if e.code else EXIT_OK

    setup_logger("DEBUG" if args.verbose else LOG_LEVEL)
    try:
        cfg = _job_config(args)
        cfg.weights = parse_weight_list(args.weights)
    except (ValidationError, InvalidWeight) as e:
        log.error(f"invalid arguments: {e}")
        return EXIT_INVALID_INPUT
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
