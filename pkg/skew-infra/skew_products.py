#!/usr/bin/env python3
"""
Batch entry point: build the skew-product of an instance file and run one pipeline on it.

    skew_products.py inspect --instance torus_two_marked_points
    skew_products.py maharam --instance resources/instances/torus_two_marked_points.json --psi 0.5 --level 3
    skew_products.py verify --instance genus_two --seed 7 --out report.json
"""
import csv
import io
import json
import sys
from argparse import ArgumentParser
from pathlib import Path
from typing import Any, List, Optional, Tuple

from tabulate import tabulate

from logger import log, suppressAndLog
from skew_infra import consts
from skew_infra.consts import Commands, ExitCode, OutputFormat
from skew_infra.errors import AmplificationBoundExceeded, NumericalError, ValidationError
from skew_infra.helper_classes import SkewProduct, load_instance
from skew_infra.maharam import continuity_profile, cylinder_family, cylinder_id, measure_table
from skew_infra.utils import parse_vector, seeded_rng
from skew_infra.utils.global_variables import GlobalVariables
from skew_infra.verification import VerificationSuite, load_catalogue

global_variables = GlobalVariables()

Result = Tuple[Any, int]


def resolve_instance(name: str) -> Path:
    """A path, or the name of a packaged instance"""
    path = Path(name)
    if path.exists():
        return path
    packaged = Path(global_variables.instances_folder).joinpath(f"{name}.json")
    return packaged if packaged.exists() else path


def _matrix_table(rows) -> str:
    return tabulate(rows, tablefmt="plain")


def cmd_inspect(product: SkewProduct, args) -> Result:
    data = product.to_json()
    data["edges"] = len(product.diagram.edges)
    text = "\n".join(
        [
            f"{product.name}: {product.instance.combinatorics}, loop {product.instance.base_loop.letters} x {product.instance.power}",
            tabulate([[j, q, " ".join(map(str, product.instance.tower.word(j)))]
                      for j, q in enumerate(product.instance.tower.q, start=1)], headers=["tower", "q", "word"]),
            "A =",
            _matrix_table(product.instance.A.tolist()),
            f"positive: {data['positive']}, pf eigenvalue {data['pf_eigenvalue']}",
        ]
    )
    return (data, text), ExitCode.OK


def cmd_eigencocycles(product: SkewProduct, args) -> Result:
    m, basis = product.eigencocycles()
    data = {"m": m, "basis": [list(b) for b in basis]}
    if product.config.phi:
        data["phi"] = product.phi.to_json() if product.phi is not None else None
        data["periodic_type"] = product.is_periodic_type()
    if not m:
        return (data, consts.NO_SKEW_PRODUCT_MESSAGE), ExitCode.OK
    text = f"m = {m}\n" + tabulate([[f"phi_{k + 1}"] + list(b) for k, b in enumerate(basis)],
                                   headers=["basis"] + [str(j) for j in range(1, product.d + 1)])
    return (data, text), ExitCode.OK


def cmd_certify(product: SkewProduct, args) -> Result:
    try:
        certificate = product.certificate
    except AmplificationBoundExceeded as e:
        log.warning("Certificate is inconclusive: %s", e)
        data = {"verdict": None, "status": "inconclusive", "bound": e.bound, "diagnostics": e.diagnostics}
        return (data, f"inconclusive: no qualifying prefix up to {e.bound} periods"), ExitCode.INCONCLUSIVE
    data = certificate.to_json()
    text = tabulate([[key, json.dumps(value)] for key, value in data.items()], tablefmt="plain")
    return (data, text), ExitCode.OK if certificate.verdict else ExitCode.CHECK_FAILURE


def _csv(header: List[str], records: List[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(records)
    return buffer.getvalue()


def cmd_maharam(product: SkewProduct, args) -> Result:
    product.require_periodic_type()
    tables = [measure_table(product.measure(p), product.config.level, args.fiber_radius) for p in product.parameters()]
    header = tables[0].header()
    records = [record for table in tables for record in table.records()]
    data = [dict(zip(header, record)) for record in records]
    return (data, _csv(header, records)), ExitCode.OK


def cmd_continuity(product: SkewProduct, args) -> Result:
    product.require_periodic_type()
    config = product.config
    rng = seeded_rng(config.seed, "continuity")
    cylinders = cylinder_family(product.diagram, config.continuity_level, config.cylinder_family_size, rng, product.m)
    profile = continuity_profile(product.diagram, product.f, cylinders, product.grids(), config.refinements,
                                 config.max_workers, counting=product.counting)
    data = {
        "cylinders": [cylinder_id(c) for c in cylinders],
        "moduli": [list(m) for m in profile.moduli],
        "decreasing": profile.is_decreasing(),
        "rows": [dict(zip(profile.header(), record)) for record in profile.records()],
    }
    return (data, _csv(profile.header(), profile.records())), ExitCode.OK


def cmd_verify(product: SkewProduct, args) -> Result:
    if args.perturb_phi is not None:
        phi = product.require_phi().perturbed(args.perturb_phi)
        log.info("Verifying with phi_%d perturbed to %s", args.perturb_phi, phi.value(args.perturb_phi))
        product = product.with_phi(phi)
    catalogue = load_catalogue(args.catalogue or global_variables.verification_catalogue)
    report = VerificationSuite(product, catalogue, product.config.seed).run()
    return (report.to_json(), report.to_text()), report.exit_code


COMMANDS = {
    Commands.INSPECT: cmd_inspect,
    Commands.EIGENCOCYCLES: cmd_eigencocycles,
    Commands.CERTIFY: cmd_certify,
    Commands.MAHARAM: cmd_maharam,
    Commands.CONTINUITY: cmd_continuity,
    Commands.VERIFY: cmd_verify,
}


def emit(payload: Tuple[Any, str], output_format: str, out: Optional[str]):
    data, text = payload
    if output_format == OutputFormat.JSON:
        rendered = json.dumps(data, indent=2, default=str) + "\n"
    else:
        rendered = text if text.endswith("\n") else text + "\n"
    if out:
        Path(out).write_text(rendered)
        log.info("Wrote %s", out)
    else:
        sys.stdout.write(rendered)


def default_format(command: str) -> str:
    return OutputFormat.CSV if command in (Commands.MAHARAM, Commands.CONTINUITY) else OutputFormat.JSON


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = handle_arguments(argv)
    except SystemExit as e:
        # usage errors are invalid input; status 2 belongs to failed checks
        return ExitCode.OK if not e.code else ExitCode.VALIDATION_ERROR
    output_format = args.format or default_format(args.command)
    try:
        config = load_instance(
            resolve_instance(args.instance),
            level=args.level,
            seed=args.seed,
            psi=[parse_vector(p) for p in args.psi] if args.psi else None,
            grid=args.grid,
        )
        product = SkewProduct.from_config(config)
        payload, code = COMMANDS[args.command](product, args)
    except (ValidationError, ValueError) as e:
        log.error("%s", e)
        return ExitCode.VALIDATION_ERROR
    except (AmplificationBoundExceeded, NumericalError) as e:
        log.error("Inconclusive: %s", e)
        return ExitCode.INCONCLUSIVE

    if output_format == OutputFormat.CSV and args.command not in (Commands.MAHARAM, Commands.CONTINUITY):
        output_format = OutputFormat.TEXT
    with suppressAndLog(BrokenPipeError):
        emit(payload, output_format, args.out)
    return code


# values of these options may start with "-" (negative psi, grids over [-1, 1])
SIGNED_VALUE_OPTIONS = ("--psi", "--grid")


def attach_signed_values(argv: List[str]) -> List[str]:
    """Rewrite "--grid -1:1:4" as "--grid=-1:1:4" so argparse does not take the value for a flag"""
    attached = []
    args = iter(argv)
    for arg in args:
        value = next(args, None) if arg in SIGNED_VALUE_OPTIONS else None
        attached.append(arg if value is None else f"{arg}={value}")
    return attached


def handle_arguments(argv: Optional[List[str]] = None):
    parser = ArgumentParser(description="Periodic-type skew-products over interval exchanges")

    parser.add_argument("command", help="Pipeline to run", choices=Commands.ALL)
    parser.add_argument("--instance", help="Instance file, or the name of a packaged instance", type=str, required=True)
    parser.add_argument("--psi", help="Maharam parameter v1,...,vm (repeatable)", action="append", default=None)
    parser.add_argument("--grid", help="min:max:steps per psi coordinate (repeatable)", action="append", default=None)
    parser.add_argument("--level", help="Path length k for measure tables and sampled checks", type=int, default=None)
    parser.add_argument("--seed", help="Seed for every sampled set", type=int, default=None)
    parser.add_argument("--fiber-radius", help="Largest |a| in measure tables (default: attainable)", type=int, default=None)
    parser.add_argument("--perturb-phi", help="Add 1 to phi at this label before verifying", type=int, default=None)
    parser.add_argument("--catalogue", help="Verification catalogue", type=str, default=None)
    parser.add_argument("--out", help="Write the output here instead of stdout", type=str, default=None)
    parser.add_argument("--format", help="Output format", choices=(OutputFormat.JSON, OutputFormat.CSV, OutputFormat.TEXT),
                        default=None)

    return parser.parse_args(attach_signed_values(sys.argv[1:] if argv is None else list(argv)))


if __name__ == '__main__':
    sys.exit(main())
