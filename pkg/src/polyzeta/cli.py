"""Command-line front end.

Every subcommand assembles a report dict and renders it as JSON, CSV or an
aligned text table.  Rationals are emitted as exact ``"p/q"`` strings and
floats with 17 significant digits, so reports are byte-reproducible.

Exit codes: 0 success, 1 domain error (e.g. inadmissible prime), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import __version__
from . import invariants as inv
from . import modp, zeta
from ._parallel import default_jobs
from .errors import ParseError, PolyZetaError
from .numkernel import is_prime
from .polyq import RatPoly, parse_poly, to_text
from .qoracle import DEFAULT_DEGREE_CAP, factor_over_q

SCAN_BOUND = 10**4
ESTIMATOR_BOUND = 10**5


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# serialization


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, RatPoly):
        return to_text(obj)
    if isinstance(obj, modp.FactorizationPattern):
        return obj.to_list()
    return obj


def _scalar(v) -> str:
    if v is None:
        return "null"
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, float):
        if math.isnan(v) or math.isinf(v):
            return json.dumps(str(v))
        return format(v, ".17g")
    if isinstance(v, int):
        return str(v)
    return json.dumps(v, ensure_ascii=False)


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with floats printed at 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in obj):
            return "[" + ", ".join(_scalar(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return _scalar(obj)


def flatten(obj, prefix: str = ""):
    """Leaf ``(path, rendered value)`` rows; empty containers are leaves too."""
    if isinstance(obj, dict):
        if not obj:
            yield prefix, "{}"
        for k, v in obj.items():
            yield from flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        if not obj:
            yield prefix, "[]"
        for i, v in enumerate(obj):
            yield from flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, _scalar(obj) if not isinstance(obj, str) else obj


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report) + "\n"
    rows = list(flatten(report))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["field", "value"])
        writer.writerows(rows)
        return buf.getvalue()
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


# ---------------------------------------------------------------------------
# argument helpers


def _poly(text: str) -> RatPoly:
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise UsageError(f"malformed polynomial {text!r}: {exc}") from None


def _complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"--s expects RE or RE,IM, got {text!r}")


def _prime_list(text: str) -> list[int]:
    if not text:
        return []
    try:
        return sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise UsageError(f"--exclude expects comma-separated primes, got {text!r}") from None


def _need_prime(args) -> int:
    if args.prime is None:
        raise UsageError("this command requires --prime")
    if not is_prime(args.prime) or args.prime >= modp.MAX_PRIME:
        raise UsageError(f"--prime must be a prime below 2**62, got {args.prime}")
    return args.prime


def _bound(args, default: int) -> int:
    b = default if args.bound is None else args.bound
    if b < 1:
        raise UsageError(f"--bound must be positive, got {b}")
    return b


# ---------------------------------------------------------------------------
# subcommands: each returns (inputs, parameters, result)


def cmd_pattern(args):
    f, p = _poly(args.poly), _need_prime(args)
    g = modp.reduce_mod_p(f, p)
    pat = modp.pattern_of(g)
    return [f], {"prime": p, "seed": args.seed}, {"reduction": str(g), "pattern": pat}


def cmd_patterns(args):
    f, b = _poly(args.poly), _bound(args, SCAN_BOUND)
    table = zeta.pattern_table(f, b, args.jobs)
    rows = [{"prime": p, "pattern": pat} for p, pat in table]
    return [f], {"bound": b, "seed": args.seed}, {"patterns": rows}


def cmd_zeta(args):
    f, b = _poly(args.poly), _bound(args, SCAN_BOUND)
    points = [_complex(t) for t in (args.s or ["2"])]
    excl = _prime_list(args.exclude)
    tz = zeta.TruncatedZeta.build(f, b, excl, args.jobs)
    values = []
    for s in points:
        if s.real <= 0:
            raise UsageError("--s needs a positive real part")
        zv = tz.evaluate(s)
        values.append(
            {"s": s, "value": zv.value, "majorant": zv.majorant, "convergent": zv.convergent}
        )
    params = {"bound": b, "s": points, "exclude": excl}
    return [f], params, {"values": values}


def cmd_pole(args):
    f, b = _poly(args.poly), _bound(args, ESTIMATOR_BOUND)
    grid = [_complex(t).real for t in args.s] if args.s else list(zeta.DEFAULT_GRID)
    excl = _prime_list(args.exclude)
    mean = zeta.factor_count_mean(f, b, args.jobs)
    reg = zeta.pole_order_estimate(f, b, grid, excl, args.jobs)
    result = {
        "chebotarev_mean": {"estimate": mean.estimate, **mean.stats},
        "log_regression": {
            "estimate": reg.estimate,
            "residual_rms": reg.residual,
            **reg.stats,
        },
        "rounded": {"chebotarev_mean": round(mean.estimate), "log_regression": round(reg.estimate)},
    }
    return [f], {"bound": b, "s": grid, "exclude": excl}, result


def cmd_equiv(args):
    f, g, b = _poly(args.poly), _poly(args.poly2), _bound(args, SCAN_BOUND)
    return [f, g], {"bound": b}, {"differing_primes": zeta.class_equiv_scan(f, g, b, args.jobs)}


def cmd_schur(args):
    f, b = _poly(args.poly), _bound(args, SCAN_BOUND)
    primes = inv.schur_scan(f, b, args.jobs)
    n = len(zeta.primes_up_to(b))
    return [f], {"bound": b}, {"primes": primes, "count": len(primes), "density": len(primes) / n if n else 0.0}


def cmd_splitting(args):
    f, b = _poly(args.poly), _bound(args, SCAN_BOUND)
    primes = inv.splitting_set(f, b, args.jobs)
    return [f], {"bound": b}, {"primes": primes, "count": len(primes)}


def cmd_symdiff(args):
    f, g, b = _poly(args.poly), _poly(args.poly2), _bound(args, SCAN_BOUND)
    primes = inv.splitting_symdiff(f, g, b, args.jobs)
    return [f, g], {"bound": b}, {"primes": primes, "count": len(primes)}


def cmd_zeros(args):
    f = _poly(args.poly)
    r1, r2 = inv.real_complex_zero_counts(f)
    return [f], {}, {"r1": r1, "r2": r2}


def cmd_normal_form(args):
    f = _poly(args.poly)
    nf = inv.quadratic_normal_form(f)
    return [f], {}, {"D": nf.D, "a": nf.a, "b": nf.b, "normal_form": RatPoly([-nf.D, 0, 1])}


def cmd_cyclotomic(args):
    if args.n < 1:
        raise UsageError("n must be positive")
    return [], {"n": args.n}, {"poly": inv.cyclotomic(args.n)}


def cmd_golomb(args):
    if args.n < 2:
        raise UsageError("golomb needs n >= 2")
    return [], {"n": args.n}, {"cyclic": inv.golomb_predict(args.n)}


def cmd_scan_irreducible(args):
    f, b = _poly(args.poly), _bound(args, SCAN_BOUND)
    w = inv.irreducible_mod_scan(f, b)
    note = f"irreducible modulo {w}" if w is not None else f"no witness <= {b}"
    return [f], {"bound": b}, {"witness": w, "note": note}


def cmd_factor(args):
    f = _poly(args.poly)
    res = factor_over_q(f, args.degree_cap)
    factors = [{"factor": g, "multiplicity": e} for g, e in res.factors]
    result = {"unit": res.unit, "factors": factors, "factor_count": res.factor_count}
    return [f], {"degree_cap": args.degree_cap}, result


def cmd_hensel(args):
    f, p = _poly(args.poly), _need_prime(args)
    fac = modp.factor_mod_p(modp.reduce_mod_p(f, p), args.seed)
    if any(e > 1 for _, e in fac.factors):
        raise PolyZetaError(f"reduction mod {p} is not squarefree (ramified case)")
    lift = zeta.hensel_lift_step(f, p, [g for g, _ in fac.factors])
    lifted = [{"coeffs": list(c), "text": to_text(RatPoly(c))} for c in lift.factors]
    result = {
        "factors_mod_p": [str(g) for g, _ in fac.factors],
        "modulus": lift.modulus,
        "lifted": lifted,
        "product_mod_p2": list(lift.product()),
    }
    return [f], {"prime": p, "seed": args.seed}, result


def cmd_arith_zeta(args):
    f, p = _poly(args.poly), _need_prime(args)
    spec = zeta.arithmetic_zeta_factor(f, p)
    return [f], {"prime": p}, {"pattern": spec.pattern, "closed_points": len(spec.pattern)}


def cmd_invariants(args):
    f, b = _poly(args.poly), _bound(args, ESTIMATOR_BOUND)
    rep = inv.invariant_report(f, b, args.jobs)
    result = {
        "factor_count_mean": rep.factor_count_mean,
        "pole_estimate": rep.pole_estimate,
        "r1": rep.r1,
        "r2": rep.r2,
        "schur_count": rep.schur_count,
        "schur_density": rep.schur_density,
        "splits_count": rep.splits_count,
        "irreducible_witness": rep.irreducible_witness,
    }
    return [f], {"bound": b}, result


COMMANDS = {
    "pattern": (cmd_pattern, 1, "factorization pattern modulo --prime"),
    "patterns": (cmd_patterns, 1, "patterns at every admissible p <= --bound"),
    "zeta": (cmd_zeta, 1, "truncated global zeta product at each --s"),
    "pole": (cmd_pole, 1, "pole-order estimators at s = 1"),
    "equiv": (cmd_equiv, 2, "primes where two polynomials' patterns differ"),
    "schur": (cmd_schur, 1, "primes where the reduction has a root"),
    "splitting": (cmd_splitting, 1, "primes where the polynomial splits completely"),
    "symdiff": (cmd_symdiff, 2, "symmetric difference of splitting sets"),
    "zeros": (cmd_zeros, 1, "real zeros and complex pairs, with multiplicity"),
    "normal-form": (cmd_normal_form, 1, "quadratic normal form X^2 - D"),
    "cyclotomic": (cmd_cyclotomic, 0, "n-th cyclotomic polynomial"),
    "golomb": (cmd_golomb, 0, "whether Phi_n is irreducible modulo some prime"),
    "scan-irreducible": (cmd_scan_irreducible, 1, "smallest prime with irreducible reduction"),
    "factor": (cmd_factor, 1, "exact factorization over Q (Kronecker)"),
    "hensel": (cmd_hensel, 1, "lift the factorization mod --prime to mod prime^2"),
    "arith-zeta": (cmd_arith_zeta, 1, "arithmetic-zeta Euler factor at --prime"),
    "invariants": (cmd_invariants, 1, "aggregate invariant report"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int)
    common.add_argument("--bound", type=int)
    common.add_argument("--s", action="append", metavar="RE[,IM]")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--jobs", type=int, default=None)
    common.add_argument("--exclude", default="")
    common.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)

    parser = _Parser(prog="polyzeta", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"polyzeta {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, arity, helptext) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if arity == 0:
            sp.add_argument("n", type=int)
        if arity >= 1:
            sp.add_argument("poly")
        if arity == 2:
            sp.add_argument("poly2")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.jobs is None:
            args.jobs = default_jobs()
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if args.degree_cap < 1:
            raise UsageError("--degree-cap must be at least 1")
        handler = COMMANDS[args.command][0]
        inputs, params, result = handler(args)
    except UsageError as exc:
        print(f"polyzeta: usage error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (PolyZetaError, ValueError, ArithmeticError) as exc:
        print(f"polyzeta: error: {exc}", file=stderr)
        return 1
    report = {
        "command": args.command,
        "version": __version__,
        "inputs": [to_text(f) for f in inputs],
        "parameters": params,
        "result": result,
    }
    stdout.write(render(_jsonable(report), args.format))
    return 0


def main():
    sys.exit(run(sys.argv[1:]))
