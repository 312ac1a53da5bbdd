"""
Command line interface for the distribution algebra.

Exit codes: 0 success, 1 math errors and failed checks, 2 usage and syntax errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from .algebra import (
    Distribution,
    LimitOracle,
    derivative,
    hormander_product,
    pair,
    star,
)
from .errors import DistAlgError, DistSyntaxError
from .expr import chop, format_real, format_scalar
from .schrodinger import (
    H_D,
    commutator_HD_P,
    eigen_residual,
    operator_from_name,
    symmetry_defect,
)
from .syntax import format_dist, lower, parse_dist, parse_test_function, to_dict
from .utils.config_loader import ConfigLoader, KernelSettings
from .utils.logger import KernelLogger, setup_logger

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

OPERATOR_HELP = "HC, HS, HD, Pplus, Pminus, dx, deltaplus(n) or deltaminus(n)"


class DistAlgCLI:
    """Runs one subcommand against a fixed set of kernel settings"""

    def __init__(self, settings: KernelSettings, as_json: bool = False, json_indent: int = 2):
        self.settings = settings
        self.as_json = as_json
        self.json_indent = json_indent
        self.logger = KernelLogger("cli")

    # input

    def dist(self, text: str) -> Distribution:
        return lower(parse_dist(text), self.settings)

    # output

    def emit_dist(self, F: Distribution, extra: Optional[Dict[str, Any]] = None) -> None:
        if self.as_json:
            payload = {"result": format_dist(F), "distribution": to_dict(F)}
            payload.update(extra or {})
            self.emit_json(payload)
        else:
            print(format_dist(F))

    def emit_value(self, value: complex, extra: Optional[Dict[str, Any]] = None) -> None:
        value = chop(value, self.settings.eps_zero)
        if self.as_json:
            payload = {"value": [value.real, value.imag]}
            payload.update(extra or {})
            self.emit_json(payload)
        else:
            print(format_scalar(value).strip("()"))

    def emit_json(self, payload: Dict[str, Any]) -> None:
        print(json.dumps(payload, indent=self.json_indent))

    # subcommands

    def star(self, args) -> int:
        self.emit_dist(star(self.dist(args.left), self.dist(args.right), self.settings))
        return EXIT_OK

    def product(self, args) -> int:
        F, G = self.dist(args.left), self.dist(args.right)
        self.emit_dist(hormander_product(F, G, self.settings))
        return EXIT_OK

    def derive(self, args) -> int:
        F = self.dist(args.expr)
        for _ in range(args.order):
            F = derivative(F, self.settings)
        self.emit_dist(F)
        return EXIT_OK

    def normalize(self, args) -> int:
        self.emit_dist(self.dist(args.expr))
        return EXIT_OK

    def pair(self, args) -> int:
        t = parse_test_function(args.test)
        self.emit_value(pair(self.dist(args.expr), t, self.settings))
        return EXIT_OK

    def limit(self, args) -> int:
        t = parse_test_function(args.test)
        oracle = LimitOracle(self.dist(args.left), self.dist(args.right), self.settings)
        result = oracle.pair(t)
        self.logger.info(f"limit from {len(result.epsilons)} epsilon levels")
        if self.as_json:
            extra = {"error": result.error, "epsilons": list(result.epsilons)}
            self.emit_value(result.value, extra)
        else:
            value = chop(result.value, self.settings.eps_zero)
            print(f"{format_scalar(value).strip('()')} +- {result.error:.3g}")
        return EXIT_OK

    def check_eigen(self, args) -> int:
        H = operator_from_name(args.op)
        residual = eigen_residual(H, self.dist(args.psi), args.energy, self.settings)
        passed = residual.is_zero(self.settings.eps_zero, self.settings)
        norm = residual.residual_norm(self.settings)
        shown = format_real(norm if norm >= self.settings.eps_zero else 0.0)
        if self.as_json:
            self.emit_json(
                {
                    "operator": str(H),
                    "energy": args.energy,
                    "pass": passed,
                    "residual": norm,
                    "residual_distribution": to_dict(residual),
                }
            )
        else:
            print(f"{'PASS' if passed else 'FAIL'} residual {shown}")
        return EXIT_OK if passed else EXIT_FAILURE

    def commutator(self, args) -> int:
        sign = 1 if args.sign in ("+", "plus") else -1
        result = commutator_HD_P(sign, self.dist(args.psi), self.settings)
        self.emit_dist(result, {"operator": str(H_D), "sign": sign})
        return EXIT_OK

    def symmetry_defect(self, args) -> int:
        H = operator_from_name(args.op)
        phi, psi = self.dist(args.phi), self.dist(args.psi)
        self.emit_value(symmetry_defect(H, phi, psi, self.settings))
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Emit JSON")
    common.add_argument(
        "--tol", type=float, default=argparse.SUPPRESS, help="Zero tolerance (default 1e-9)"
    )
    common.add_argument(
        "--window",
        type=float,
        default=argparse.SUPPRESS,
        help="Inner product window L (default 40)",
    )
    common.add_argument(
        "--config", default=argparse.SUPPRESS, help="Directory holding kernel_config.yaml"
    )
    common.add_argument(
        "--debug", action="store_true", default=argparse.SUPPRESS, help="Enable debug logging"
    )

    parser = argparse.ArgumentParser(
        prog="distalg",
        description="Piecewise smooth distributions, the star product and confined Hamiltonians",
        epilog="Expressions starting with '-' go after '--'.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    p = command("star", "Star product F ** G")
    p.add_argument("left")
    p.add_argument("right")

    p = command("product", "Hörmander product F * G (disjoint singular supports)")
    p.add_argument("left")
    p.add_argument("right")

    p = command("derive", "Distributional derivative")
    p.add_argument("expr")
    p.add_argument("--order", type=int, default=1, help="Number of derivatives")

    p = command("normalize", "Print the normalized form")
    p.add_argument("expr")

    p = command("pair", "Pair with a test function")
    p.add_argument("expr")
    p.add_argument("--test", required=True, help="Test function, e.g. bump(0,1)")

    p = command("limit", "Epsilon-limit of <F . G(x + eps), t>")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--test", required=True, help="Test function, e.g. bump(0,1)")

    p = command("check-eigen", "Check H psi = E psi")
    p.add_argument("--op", required=True, help=OPERATOR_HELP)
    p.add_argument("--psi", required=True)
    p.add_argument("--energy", type=float, required=True)

    p = command("commutator", "[H_D, P+-] psi")
    p.add_argument("--sign", choices=["+", "-", "plus", "minus"], default="+")
    p.add_argument("--psi", required=True)

    p = command("symmetry-defect", "<H phi, psi> - <phi, H psi>")
    p.add_argument("--op", required=True, help=OPERATOR_HELP)
    p.add_argument("--phi", required=True)
    p.add_argument("--psi", required=True)

    return parser


def _report(error: Exception) -> None:
    print(f"error: {error}", file=sys.stderr)
    subexpression = getattr(error, "subexpression", None)
    if subexpression:
        print(f"  in: {subexpression}", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    loader = ConfigLoader(getattr(args, "config", None))
    config = loader.load_kernel_config()
    cli_config = config.get("cli", {})

    debug = getattr(args, "debug", False)
    configured = str(cli_config.get("log_level", "WARNING")).upper()
    level = logging.DEBUG if debug else getattr(logging, configured, logging.WARNING)
    setup_logger("distalg", level=level, stream=sys.stderr)

    settings = KernelSettings.from_config(config).with_overrides(
        eps_zero=getattr(args, "tol", None), window=getattr(args, "window", None)
    )
    cli = DistAlgCLI(settings, getattr(args, "json", False), int(cli_config.get("json_indent", 2)))
    handler = getattr(cli, args.command.replace("-", "_"))

    try:
        return handler(args)
    except DistSyntaxError as e:
        _report(e)
        return EXIT_USAGE
    except ValueError as e:
        _report(e)
        return EXIT_USAGE
    except DistAlgError as e:
        _report(e)
        return EXIT_FAILURE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
