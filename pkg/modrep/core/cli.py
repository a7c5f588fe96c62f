"""Command line front end: ``modrep <command> [options]``.

Weights are comma separated fundamental-weight coefficients and nodes are
numbered from 1, both in Bourbaki order. Exit status: 0 success, 1 failed
verification, 2 usage error, 3 precondition failure, 4 size-cap refusal,
5 internal invariant failure.
"""

from __future__ import annotations

import argparse
from pathlib import Path
import sys
from typing import Optional, TYPE_CHECKING

import pydantic

from modrep.core import acceptance
from modrep.core import errors
from modrep.core.characters import freudenthal_multiplicities
from modrep.core.characters import weyl_dimension
from modrep.core.jordan import bound_inputs_for_order
from modrep.core.jordan import dimension_bound
from modrep.core.jordan import jordan_type
from modrep.core.jordan import matrix_order
from modrep.core.jordan import single_nontrivial_block
from modrep.core.jordan import tensor_jordan
from modrep.core.levels import candidate_factor_report
from modrep.core.levels import level_decomposition
from modrep.core.levels import reverse_levi_labels
from modrep.core.logger import enable_debug_logging
from modrep.core.logger import logger
from modrep.core.modular import irreducible_head_mod_p
from modrep.core.modular import modular_weight_multiplicities
from modrep.core.modular import radical_weights
from modrep.core.root_system import build_root_system
from modrep.core.root_system import orbit_size
from modrep.core.schemas.jordan import BoundInputs
from modrep.core.schemas.records import ModuleReport
from modrep.core.schemas.records import RootSystemRecord
from modrep.core.schemas.records import RunConfig
from modrep.core.schemas.records import ValueRecord
from modrep.core.schemas.records import WeightRecord
from modrep.core.schemas.unipotent import Verdict
from modrep.core.settings import Settings
from modrep.core.sl2 import sl2_scan
from modrep.core.unipotent import SINGLE_BLOCK_DIM
from modrep.core.unipotent import evaluate_word
from modrep.core.unipotent import g2_class_representative
from modrep.core.util import serialization
from modrep.core.util.type_coercion import parse_int_list
from modrep.core.util.type_coercion import parse_lie_type
from modrep.core.weyl_module import construct_weyl_module

if TYPE_CHECKING:
    from collections.abc import Sequence

    from modrep.core.characters import WeightMultTable
    from modrep.core.root_system import RootDatum

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_SIZE_CAP = 4
EXIT_INVARIANT = 5


def _coords(values: Sequence[int]) -> str:
    return ",".join(str(x) for x in values)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return parse_int_list(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("text", "records"), default="text", help="Output format (default: text)")
    common.add_argument("--size-cap", type=int, default=None, help=f"Largest Weyl dimension built explicitly (default: MR_SIZE_CAP or {Settings.size_cap})")
    common.add_argument("--debug", action="store_true", help="Debug logging on stderr")

    def typed(parser: argparse.ArgumentParser, weight: bool = True) -> None:
        parser.add_argument("--type", dest="lie_type", required=True, help="Cartan type, e.g. G2 or F4")
        if weight:
            parser.add_argument("--weight", type=_int_list, required=True, help="Highest weight, e.g. 1,0,0,1")

    parser = argparse.ArgumentParser(prog="modrep", description="Exact modular representations and Jordan blocks of unipotent elements.")
    commands = parser.add_subparsers(dest="command", required=True)

    typed(commands.add_parser("roots", parents=[common], help="Root system summary"), weight=False)
    typed(commands.add_parser("char", parents=[common], help="Freudenthal multiplicity table"))
    typed(commands.add_parser("dim", parents=[common], help="Weyl dimension"))

    module = commands.add_parser("module", parents=[common], help="Construct a Weyl module and its irreducible head")
    typed(module)
    module.add_argument("--p", type=int, default=None, help="Reduce modulo p and take the irreducible head")
    module.add_argument("--dump", type=Path, default=None, help="Write the module table to this file")

    jordan = commands.add_parser("jordan", parents=[common], help="Jordan type of a G2 class representative on L(weight)")
    typed(jordan)
    jordan.add_argument("--p", type=int, required=True)
    jordan.add_argument("--class", dest="label", choices=("regular", "G2a1", "A1_3"), default="regular")

    tensor = commands.add_parser("tensor", parents=[common], help="Jordan type of J_m x J_n")
    tensor.add_argument("--m", type=int, required=True)
    tensor.add_argument("--n", type=int, required=True)
    tensor.add_argument("--p", type=int, required=True)

    scan = commands.add_parser("sl2scan", parents=[common], help="SL2 Weyl modules and irreducibles for a < p^2")
    scan.add_argument("--p", dest="primes", type=_int_list, default=(3, 5, 7), help="Comma separated primes (default: 3,5,7)")
    scan.add_argument("--bound", type=int, default=None, help="Scan a < bound instead of a < p^2")

    levels = commands.add_parser("levels", parents=[common], help="Levi level decomposition")
    typed(levels)
    levels.add_argument("--node", type=int, required=True, help="Simple root whose coefficient gives the level (1-based)")
    levels.add_argument("--p", type=int, default=None, help="Characteristic of the Levi characters")
    levels.add_argument("--source", choices=("weyl", "head"), default="weyl", help="Weyl character, or the head modulo p")
    levels.add_argument("--level", type=int, default=None, help="Report candidate factors at this level")
    levels.add_argument("--reverse-labels", action="store_true", help="Print Levi coordinates in reversed node order")

    bound = commands.add_parser("bound", parents=[common], help="Dimension bound from conjugate generation")
    bound.add_argument("--p", type=int, required=True)
    group = bound.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="u^(p^k) has order p")
    group.add_argument("--order", type=int, help="Order of u, a power of p")
    bound.add_argument("--l", type=int, required=True, help="Rank")
    bound.add_argument("--f4", dest="f4_p2_flag", action="store_true", help="F4 in characteristic 2")

    verify = commands.add_parser("verify", parents=[common], help="Run the acceptance suite")
    verify.add_argument("--check", dest="checks", type=_int_list, default=(), help="Comma separated check numbers (default: all)")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Parse and validate a command line; argparse exits with status 2 on usage errors."""
    args = vars(build_parser().parse_args(argv))
    lie_type = args.pop("lie_type", None)
    values = {key: value for key, value in args.items() if value is not None}
    if lie_type is not None:
        try:
            values["lie_type"], values["rank"] = parse_lie_type(lie_type)
        except ValueError as err:
            raise errors.ModRepPreconditionError(str(err)) from None
    return RunConfig(**values)


def _datum(config: RunConfig) -> RootDatum:
    return build_root_system(config.lie_type, config.rank)  # type: ignore[arg-type]


def _render(config: RunConfig, records: Sequence[pydantic.BaseModel], text: str) -> str:
    if config.output_format == "records":
        return serialization.records_stream(config.command, records)
    return text if text.endswith("\n") else text + "\n"


def _value(config: RunConfig, value: object, **inputs: object) -> str:
    record = ValueRecord(command=config.command, inputs={key: str(item) for key, item in inputs.items()}, value=str(value))
    return _render(config, [record], record.value)


def _roots(config: RunConfig) -> str:
    datum = _datum(config)
    record = RootSystemRecord(
        lie_type=datum.lie_type,
        rank=datum.rank,
        cartan=datum.cartan,
        symmetrizer=datum.symmetrizer,
        positive_roots=datum.positive_roots,
        root_lengths=datum.root_lengths,
        weyl_order=datum.weyl_order,
    )
    lines = [
        f"type {datum.label}",
        f"cartan {' '.join(_coords(row) for row in datum.cartan)}",
        f"positive roots {len(datum.positive_roots)}",
        f"weyl group order {datum.weyl_order}",
    ]
    lines.extend(f"  {_coords(root)} {length}" for root, length in zip(datum.positive_roots, datum.root_lengths))
    return _render(config, [record], "\n".join(lines))


def _character_records(table: WeightMultTable) -> list[WeightRecord]:
    return [
        WeightRecord(weight=weight, multiplicity=mult, orbit_size=orbit_size(table.datum, weight)) for weight, mult in table.dominant_items()
    ]


def _char(config: RunConfig) -> str:
    table = freudenthal_multiplicities(_datum(config), config.weight)  # type: ignore[arg-type]
    records = _character_records(table)
    lines = [f"dim {table.dim}"] + [f"{_coords(r.weight)} {r.multiplicity} {r.orbit_size}" for r in records]
    return _render(config, records, "\n".join(lines))


def _module(config: RunConfig) -> str:
    datum = _datum(config)
    rep = construct_weyl_module(datum, config.weight, size_cap=config.size_cap)  # type: ignore[arg-type]
    module = rep if config.p is None else irreducible_head_mod_p(rep, config.p)
    table = rep.character() if config.p is None else modular_weight_multiplicities(module)  # type: ignore[arg-type]
    radical = {} if config.p is None else {_coords(weight): size for weight, size in radical_weights(rep, config.p).items()}
    report = ModuleReport(header=serialization.module_header(module), weyl_dim=rep.dim, radical=radical, character=_character_records(table))
    if config.dump is not None:
        serialization.dump_module(module, config.dump)
    lines = [str(report.header), f"weyl dim {report.weyl_dim}"]
    lines.extend(f"radical {weight} {size}" for weight, size in report.radical.items())
    lines.extend(f"{_coords(r.weight)} {r.multiplicity} {r.orbit_size}" for r in report.character)
    return _render(config, [report], "\n".join(lines))


def _jordan(config: RunConfig) -> str:
    datum = _datum(config)
    if (datum.lie_type, datum.rank) != ("G", 2):
        raise errors.ModRepPreconditionError(f"Class representatives are available for G2 only, not {datum.label}")
    representative = g2_class_representative(config.label or "regular", config.p)  # type: ignore[arg-type]
    head = irreducible_head_mod_p(construct_weyl_module(datum, config.weight, size_cap=config.size_cap), config.p)  # type: ignore[arg-type]
    element = evaluate_word(representative, head)
    jordan = jordan_type(element, head.p)
    prediction = representative.label == "regular" and head.dim <= SINGLE_BLOCK_DIM
    verdict = Verdict(
        p=head.p, highest=head.highest, dim=head.dim, label=representative.label, jordan_type=str(jordan),
        single_block=single_nontrivial_block(jordan), order=matrix_order(element, head.p), prediction=prediction,
        agree=single_nontrivial_block(jordan) == prediction,
    )
    return _render(config, [verdict], str(jordan))


def _sl2scan(config: RunConfig) -> str:
    records = sl2_scan(config.primes, config.bound)
    lines = [f"{r.p} {r.a} {r.kind} {r.dim} {r.jordan_type} {'ok' if r.shape_ok else 'shape'} {_coords(r.factors)}" for r in records]
    return _render(config, records, "\n".join(lines))


def _levels(config: RunConfig) -> str:
    datum = _datum(config)
    if config.source == "head":
        if config.p is None:
            raise errors.ModRepPreconditionError("--source head needs --p")
        head = irreducible_head_mod_p(construct_weyl_module(datum, config.weight, size_cap=config.size_cap), config.p)  # type: ignore[arg-type]
        source = modular_weight_multiplicities(head)
    else:
        source = freudenthal_multiplicities(datum, config.weight)  # type: ignore[arg-type]
    report = level_decomposition(source, config.node - 1, p=config.p)  # type: ignore[operator]
    relabel = reverse_levi_labels if config.reverse_labels else tuple
    lines = [f"{datum.label} {_coords(report.highest)} removed node {report.removed_node + 1} dim {report.source_dim}"]
    if report.gs_warning:
        lines.append("warning: p = 3 and the highest weight is not a multiple of omega_1")
    for d, level in enumerate(report.levels):
        lines.append(f"level {d}: " + " ".join(f"{_coords(relabel(e.weight))}:{e.multiplicity}" for e in level))
    records: list[pydantic.BaseModel] = [report]
    if config.level is not None:
        candidates = candidate_factor_report(report, config.level)
        records.extend(candidates)
        lines.append(f"candidates at level {config.level}:")
        lines.extend(
            f"  {_coords(relabel(c.weight))} count {c.count} dim {c.levi_dim}"
            + (" multiple" if c.multiple else "")
            + (" char0" if c.characteristic_zero else "")
            for c in candidates
        )
    return _render(config, records, "\n".join(lines))


def _bound(config: RunConfig) -> str:
    if config.order is not None:
        inputs = bound_inputs_for_order(config.order, config.p, config.l, config.f4_p2_flag)  # type: ignore[arg-type]
    else:
        inputs = BoundInputs(p=config.p, k=config.k, l=config.l, f4_p2_flag=config.f4_p2_flag)  # type: ignore[arg-type]
    return _value(config, dimension_bound(inputs), p=inputs.p, k=inputs.k, l=inputs.l, f4=inputs.f4_p2_flag)


def _verify(config: RunConfig) -> tuple[int, str]:
    results = acceptance.run_acceptance(config.checks or None)
    lines = []
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        lines.append(f"[{result.number}] {status} {result.name} ({result.checked} checked, {result.skipped} skipped)")
        if not result.passed:
            lines.append(f"    {result.detail}")
    failed = [result for result in results if not result.passed]
    lines.append(f"verify: {'FAIL' if failed else 'OK'} ({len(results) - len(failed)}/{len(results)} passed)")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK, _render(config, results, "\n".join(lines))


def run(config: RunConfig) -> tuple[int, str]:
    """Dispatch a validated configuration; returns the exit status and the report."""
    if config.debug:
        enable_debug_logging(log_file=Settings.log_file)
    previous_cap = Settings.size_cap
    if config.size_cap is not None:
        Settings.size_cap = config.size_cap
    try:
        return _dispatch(config)
    finally:
        Settings.size_cap = previous_cap


def _dispatch(config: RunConfig) -> tuple[int, str]:
    if config.command == "verify":
        return _verify(config)
    if config.command == "dim":
        datum = _datum(config)
        return EXIT_OK, _value(config, weyl_dimension(datum, config.weight), type=datum.label, weight=_coords(config.weight))  # type: ignore[arg-type]
    if config.command == "tensor":
        return EXIT_OK, _value(config, tensor_jordan(config.m, config.n, config.p), m=config.m, n=config.n, p=config.p)  # type: ignore[arg-type]
    handlers = {"roots": _roots, "char": _char, "module": _module, "jordan": _jordan, "sl2scan": _sl2scan, "levels": _levels, "bound": _bound}
    return EXIT_OK, handlers[config.command](config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        status, report = run(parse_config(argv))
    except SystemExit as err:  # argparse
        return int(err.code or 0)
    except pydantic.ValidationError as err:
        print(f"[error] invalid arguments: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except errors.ModRepSizeCapError as err:
        print(f"[error] {err}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except errors.ModRepPreconditionError as err:
        print(f"[error] {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except errors.ModRepInvariantError as err:
        logger.error(f"Internal invariant failure: {err}")
        print(f"[error] internal invariant failure: {err}", file=sys.stderr)
        return EXIT_INVARIANT
    sys.stdout.write(report)
    return status
