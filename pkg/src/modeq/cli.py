"""Command-line interface: ``modeq eval | verify | prove``.

Exit codes are 0 on success, 1 when an identity or certificate fails and
2 for usage, configuration or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import hypergeom, identities, moduli, qseries
from .errors import DomainError, ModeqError
from .numerics import ArbReal, Precision

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MIN_DIGITS = 30
EVAL_FUNCTIONS = ("phi", "psi", "f", "2f1", "alpha", "beta", "m")


class ConfigError(ModeqError):
    pass


def parse_rational(text: str, what: str = "value") -> Fraction:
    """Exact rational from "p/q" or an integer or terminating decimal string."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{what} must be an exact rational like 1/10, got {text!r}") from exc


@dataclass
class RunConfig:
    precision_digits: int = 100
    grid: tuple = identities.DEFAULT_GRID
    tolerance_exponent: int | None = None
    ids: tuple = ()
    output: str = "text"
    tier: str = "full"
    full_residual: bool = False

    def validate(self) -> RunConfig:
        if self.precision_digits < MIN_DIGITS:
            raise ConfigError(f"precision must be at least {MIN_DIGITS} digits")
        if not self.grid:
            raise ConfigError("empty grid")
        for q in self.grid:
            if not (0 < q <= identities.MAX_Q):
                raise ConfigError(f"grid value {q} outside (0, 1/2]")
        # exponents at or beyond the precision are allowed: they make every point fail (exit 1)
        if self.tolerance_exponent is not None and self.tolerance_exponent <= 0:
            raise ConfigError("tolerance exponent must be positive")
        if self.output not in ("text", "json"):
            raise ConfigError(f"unknown output format {self.output!r}")
        if self.tier not in ("full", "limits"):
            raise ConfigError(f"unknown tier {self.tier!r}")
        for ident in self.ids:
            identities.IdentityId(ident)
        return self

    @property
    def precision(self) -> Precision:
        return Precision.from_digits(self.precision_digits)


_CONFIG_KEYS = {"digits", "grid", "tolerance_exponent", "ids", "format", "tier"}


def read_config(path: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment.  Lists are comma separated."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (s.strip() for s in line.partition("="))
        key = key.replace("-", "_")
        if not sep or key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: expected one of {sorted(_CONFIG_KEYS)} = value")
        out[key] = value
    return out


def _split(value: str) -> list:
    return [v.strip() for v in value.split(",") if v.strip()]


def _int(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise ConfigError(f"{what} must be an integer, got {value!r}") from exc


def build_config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        raw = read_config(args.config)
        if "digits" in raw:
            cfg.precision_digits = _int(raw["digits"], "digits")
        if "grid" in raw:
            cfg.grid = tuple(parse_rational(v, "grid value") for v in _split(raw["grid"]))
        if "tolerance_exponent" in raw:
            cfg.tolerance_exponent = _int(raw["tolerance_exponent"], "tolerance_exponent")
        if "ids" in raw:
            cfg.ids = tuple(_split(raw["ids"]))
        if "format" in raw:
            cfg.output = raw["format"]
        if "tier" in raw:
            cfg.tier = raw["tier"]
    if args.digits is not None:
        cfg.precision_digits = args.digits
    if args.q:
        cfg.grid = tuple(parse_rational(v, "--q") for v in args.q)
    if args.tolerance_exponent is not None:
        cfg.tolerance_exponent = args.tolerance_exponent
    if args.all:
        cfg.ids = ()
    elif args.id:
        cfg.ids = tuple(args.id)
    if args.json:
        cfg.output = "json"
    if args.tier:
        cfg.tier = args.tier
    cfg.full_residual = args.full_residual
    try:
        return cfg.validate()
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


# -- eval ---------------------------------------------------------------

def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise ConfigError(f"eval {args.function} needs --{name.replace('_', '-')}")
    return value


def evaluate_function(args) -> ArbReal:
    prec = Precision.from_digits(max(args.digits, MIN_DIGITS) + 10)

    def num(name):
        return ArbReal.from_rational(parse_rational(_need(args, name), f"--{name}"), prec)

    fn = args.function
    if fn == "phi":
        return qseries.phi(num("q"))
    if fn == "psi":
        return qseries.psi(num("q"))
    if fn == "f":
        return qseries.theta_f(num("a"), num("b"))
    if fn == "2f1":
        return hypergeom.hyp2f1_half(num("x"))
    if fn == "alpha":
        return moduli.alpha_from_q(num("q"))
    if fn == "beta":
        n = _need(args, "n")
        return moduli.alpha_from_q(moduli.q_power(parse_rational(_need(args, "q"), "--q"), n, prec))
    if fn == "m":
        q = parse_rational(_need(args, "q"), "--q")
        n1, n2 = (1, args.n) if args.n is not None else (_need(args, "n1"), _need(args, "n2"))
        return moduli.multiplier(q, n1, n2, prec).m
    raise ConfigError(f"unknown function {fn!r}")


def cmd_eval(args) -> int:
    value = evaluate_function(args)
    print(value.to_string(args.digits, strip_zeros=False))
    return EXIT_OK


# -- verify -------------------------------------------------------------

def run_verify(cfg: RunConfig) -> list:
    prec = cfg.precision
    selected = [identities.IdentityId(i) for i in cfg.ids] or list(identities.catalog())
    reports = []
    if cfg.tier == "limits":
        anchors = set(identities.limit_anchors())
        for ident in selected:
            if ident in anchors:
                reports.append(identities.limit_report(ident, prec))
    else:
        for ident in selected:
            reports.extend(identities.verify_grid(ident, cfg.grid, prec, cfg.tolerance_exponent))
    return sorted(reports, key=lambda r: (str(r.id), Fraction(r.q)))


def _text_line(report, full: bool) -> str:
    d = report.as_dict(full)
    status = "PASS" if report.passed else "FAIL"
    line = f"{status}  {d['id']:<8} q={d['q']:<6} residual={d['residual']}  tol={d['tolerance']}"
    if report.error:
        line += f"  ({report.error})"
    return line


def cmd_verify(args) -> int:
    cfg = build_config(args)
    reports = run_verify(cfg)
    if not reports:
        raise ConfigError("no identities selected (limit tier covers only entries with a limit value)")
    if cfg.output == "json":
        print(json.dumps([r.as_dict(cfg.full_residual) for r in reports], indent=2))
    else:
        for r in reports:
            print(_text_line(r, cfg.full_residual))
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- prove --------------------------------------------------------------

def cmd_prove(args) -> int:
    from .symbolic import proofs

    certs = proofs.prove(args.step)
    if args.json:
        print(json.dumps([c.as_dict() for c in certs], indent=2))
    else:
        for c in certs:
            print(f"{c.step}: {c.status} ({c.elapsed_ms:.1f} ms)")
            if not c.exact_zero:
                print(f"  remainder: {c.remainder}")
    return EXIT_OK if all(c.exact_zero for c in certs) else EXIT_FAIL


# -- entry point --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .symbolic.proofs import STEPS

    parser = argparse.ArgumentParser(
        prog="modeq", description="Modular equations and multiplier identities of degrees 7, 23, 15 and 5/3.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a theta, hypergeometric or modulus function")
    ev.add_argument("function", choices=EVAL_FUNCTIONS)
    ev.add_argument("--q")
    ev.add_argument("--a")
    ev.add_argument("--b")
    ev.add_argument("--x")
    ev.add_argument("--n", type=int, help="degree for beta, or m with n1 = 1")
    ev.add_argument("--n1", type=int)
    ev.add_argument("--n2", type=int)
    ev.add_argument("--digits", type=int, default=30)
    ev.set_defaults(handler=cmd_eval)

    ver = sub.add_parser("verify", help="check identities on a grid of q values")
    ver.add_argument("--all", action="store_true", help="every catalog identity (the default)")
    ver.add_argument("--id", action="append", choices=[i.value for i in identities.IdentityId])
    ver.add_argument("--q", action="append", help="grid value p/q; repeatable")
    ver.add_argument("--digits", type=int)
    ver.add_argument("--tolerance-exponent", type=int)
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--tier", choices=("full", "limits"))
    ver.add_argument("--full-residual", action="store_true")
    ver.add_argument("--config")
    ver.set_defaults(handler=cmd_verify)

    pr = sub.add_parser("prove", help="replay an exact proof step")
    pr.add_argument("step", choices=list(STEPS) + ["all"])
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(handler=cmd_prove)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ConfigError, DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"modeq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
