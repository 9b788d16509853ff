"""Command-line front end: ``tetrasum <subcommand> ...`` (or ``python -m tetrasum``).

JSON is the default output; ``--format exact`` prints the exact
sign*sqrt(p/q) strings and short decimals.  Exit status is 0 on success,
1 on a domain or structure error and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

import mpmath

from . import geometry, permanent, qdeform, recoupling, statesum, wigner
from .complex import StructureError, load_complex
from .spin import DomainError, SignedSqrtRational, spin, ssr_to_float, twice

__all__ = ["main", "build_parser", "SCHEMAS"]

_NEGATIVE = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+/\d+$")


def _spin_text(t: int) -> str:
    return str(Fraction(t, 2))


def _decimal(x: SignedSqrtRational, precision):
    """Float at 53 bits; a decimal string when more bits are requested."""
    if precision is None or precision <= 53:
        return ssr_to_float(x)
    v = ssr_to_float(x, precision)
    return mpmath.nstr(v, int(precision * 0.30103), min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


def _real(x, precision):
    if precision is None or precision <= 53:
        return float(x)
    return mpmath.nstr(x, int(precision * 0.30103))


def _short(x) -> str:
    return f"{float(x):.6g}"


def _spins(values, n, what="spin"):
    if len(values) != n:
        raise DomainError(f"expected {n} {what}s, got {len(values)}")
    return [spin(v) for v in values]


def _length(text):
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"bad edge length {text!r}") from None
    if x <= 0:
        raise DomainError(f"edge length must be positive, got {text}")
    return x


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _check_bits(args):
    if args.precision is not None and args.precision < 53:
        raise DomainError(f"--precision must be at least 53 bits, got {args.precision}")
    return args.precision


def _threads(args):
    return args.threads if args.threads is not None else statesum.default_threads()


# --- subcommands ------------------------------------------------------------------

def cmd_sixj(args):
    s = wigner.Tetra6j(*_spins(args.spins, 6))
    v = wigner.sixj_exact(s)
    doc = {"symbol": [_spin_text(t) for t in s], "admissible": s.is_admissible(),
           "value": str(v), "decimal": _decimal(v, args.precision)}
    return doc, [str(v), _short(v)]


def cmd_threej(args):
    js = _spins(args.values[:3], 3)
    if len(args.values) != 6:
        raise DomainError(f"expected j1 j2 j3 m1 m2 m3, got {len(args.values)} values")
    ms = [twice(m) for m in args.values[3:]]
    v = wigner.three_j(*(Fraction(t, 2) for t in js + ms))
    doc = {"j": [_spin_text(t) for t in js], "m": [_spin_text(t) for t in ms],
           "value": str(v), "decimal": _decimal(v, args.precision)}
    return doc, [str(v), _short(v)]


def cmd_orbit(args):
    s = wigner.Tetra6j(*_spins(args.spins, 6))
    orbit = sorted(wigner.symmetry_orbit(s, regge=not args.no_regge))
    v = wigner.sixj_exact(s)
    doc = {"symbol": [_spin_text(t) for t in s], "regge": not args.no_regge,
           "size": len(orbit), "members": [str(m) for m in orbit], "value": str(v)}
    return doc, [f"size {len(orbit)}", f"value {v}"] + [str(m) for m in orbit]


def cmd_recouple(args):
    j1, j2, j3, j = _spins(args.spins, 4)
    m = recoupling.recoupling_matrix(*(Fraction(t, 2) for t in (j1, j2, j3, j)))
    entries = [[str(x) for x in row] for row in m.entries]
    doc = {"j": [_spin_text(t) for t in (j1, j2, j3, j)],
           "j12": [_spin_text(t) for t in m.j12], "j23": [_spin_text(t) for t in m.j23],
           "entries": entries, "orthogonal": m.is_orthogonal()}
    lines = ["j12\\j23 " + " ".join(_spin_text(t) for t in m.j23)]
    lines += [f"{_spin_text(x)}: " + " ".join(row) for x, row in zip(m.j12, entries)]
    lines.append(f"orthogonal {doc['orthogonal']}")
    return doc, lines


def cmd_probability(args):
    ts = _spins(args.spins, 6)
    p = recoupling.recoupling_probability(*(Fraction(t, 2) for t in ts))
    doc = {"spins": [_spin_text(t) for t in ts], "value": str(p), "decimal": float(p)}
    return doc, [str(p), _short(p)]


def _identity(check):
    return {"lhs": str(check.lhs), "rhs": str(check.rhs), "holds": check.holds,
            "residual": str(check.residual)}


def cmd_check_be(args):
    ts = _spins(args.spins, 9)
    doc = _identity(recoupling.check_biedenharn_elliott(*(Fraction(t, 2) for t in ts)))
    doc["spins"] = [_spin_text(t) for t in ts]
    return doc, [f"lhs {doc['lhs']}", f"rhs {doc['rhs']}", f"holds {doc['holds']}"]


def cmd_check_orth(args):
    ts = _spins(args.spins, 6)
    doc = _identity(recoupling.check_orthogonality(*(Fraction(t, 2) for t in ts)))
    doc["spins"] = [_spin_text(t) for t in ts]
    return doc, [f"lhs {doc['lhs']}", f"rhs {doc['rhs']}", f"holds {doc['holds']}"]


def cmd_geometry(args):
    if len(args.lengths) != 6:
        raise DomainError(f"expected 6 edge lengths, got {len(args.lengths)}")
    ls = [_length(x) for x in args.lengths]
    prec = args.precision
    v2 = geometry.volume_sq(ls)
    doc = {"lengths": [str(x) for x in ls], "volume_sq": str(v2), "euclidean": v2 > 0}
    lines = [f"volume_sq {v2}"]
    if v2 > 0:
        g = geometry.tet_geometry(ls, prec)
        doc["volume"] = _real(g.volume, prec)
        doc["dihedral"] = [_real(t, prec) for t in g.dihedral]
        lines.append(f"volume {_short(g.volume)}")
        lines.append("dihedral " + " ".join(_short(t) for t in g.dihedral))
    return doc, lines


def cmd_asympt(args):
    s = wigner.Tetra6j(*_spins(args.spins, 6))
    prec = args.precision
    exact = wigner.sixj_exact(s)
    v2 = geometry.volume_sq(geometry.sixj_lengths(s))
    if v2 <= 0:
        raise geometry.NonEuclideanError(v2, f"classically forbidden: V^2 = {v2} for lengths j + 1/2")
    phase = geometry.pr_asymptotic(s, "phase", prec)
    wig = geometry.pr_asymptotic(s, "wigner", prec)
    std = geometry.pr_asymptotic(s, "standard", prec)
    doc = {"symbol": [_spin_text(t) for t in s], "exact": str(exact),
           "exact_decimal": ssr_to_float(exact), "volume_sq": str(v2),
           "phase": _real(phase, prec), "standard": _real(std, prec),
           "wigner": _real(wig, prec)}
    return doc, [f"exact {exact} = {_short(exact)}", f"phase {_short(phase)}",
                 f"standard {_short(std)}", f"wigner {_short(wig)}"]


def cmd_regge(args):
    cx = load_complex(args.complex)
    if not cx.lengths:
        raise StructureError(f"{args.complex}: no lengths section")
    action, deficits = geometry.regge_action_3d(cx, cx.lengths, args.precision)
    prec = args.precision
    doc = {"complex": cx.name, "counts": list(cx.counts), "action": _real(action, prec),
           "deficits": [{"edge": list(e), "deficit": _real(deficits[e], prec)} for e in cx.edges]}
    lines = [f"action {_short(action)}"]
    lines += [f"{e[0]} {e[1]} {_short(deficits[e])}" for e in cx.edges]
    return doc, lines


def cmd_qint(args):
    qdeform.check_level(args.level)
    v = qdeform.quantum_integer(args.n, args.level, args.precision if (args.precision or 0) > 53 else None)
    doc = {"n": args.n, "level": args.level, "value": _real(v, args.precision)}
    return doc, [_short(v)]


def cmd_qsixj(args):
    s = wigner.Tetra6j(*_spins(args.spins, 6))
    prec = args.precision if (args.precision or 0) > 53 else None
    v = qdeform.q_sixj(s, args.level, prec)
    doc = {"symbol": [_spin_text(t) for t in s], "level": args.level, "value": _real(v, args.precision)}
    return doc, [_short(v)]


def cmd_tv(args):
    cx = load_complex(args.complex)
    res = statesum.tv_invariant(cx, args.level, workers=_threads(args))
    doc = {"complex": cx.name, "counts": list(cx.counts), "level": res.level,
           "value": res.value, "w": res.w, "w_formula": res.w_formula,
           "colorings": res.colorings}
    return doc, [f"{res.value:.12g}"]


def cmd_pr_sum(args):
    cx = load_complex(args.complex)
    res = statesum.pr_functional_cutoff(cx, args.cutoff, args.constant, workers=_threads(args))
    doc = {"complex": cx.name, "counts": list(cx.counts), "cutoff": _spin_text(spin(args.cutoff)),
           "constant": res.constant, "lambda": res.lam, "value": res.value,
           "colorings": res.colorings}
    return doc, [f"{res.value:.12g}"]


def cmd_perm(args):
    text = _read_text(args.input)
    if args.graph:
        a = permanent.incidence_matrix(permanent.parse_edge_list(text))
    else:
        a = permanent.parse_matrix(text)
    p = permanent.permanent(a, workers=_threads(args))
    doc = {"n": int(a.shape[0]), "permanent": str(p)}
    return doc, [str(p)]


def cmd_incidence(args):
    g = permanent.parse_edge_list(_read_text(args.input), args.vertices)
    a = permanent.incidence_matrix(g)
    rows = ["".join(str(int(x)) for x in row) for row in a]
    doc = {"n": g.n, "edges": [list(e) for e in g.edges], "matrix": rows}
    return doc, rows


# --- JSON schemas -----------------------------------------------------------------

_STR = {"type": "string"}
_NUM = {"type": "number"}
_NUM_OR_STR = {"type": ["number", "string"]}
_BOOL = {"type": "boolean"}
_INT = {"type": "integer"}
_STRS = {"type": "array", "items": _STR}
_COUNTS = {"type": "array", "items": _INT, "minItems": 4, "maxItems": 4}
_EXACT = {"type": "string", "pattern": r"^([+-]sqrt\(\d+/\d+\)|0sqrt\(0/1\))$"}


def _obj(**props):
    return {"type": "object", "required": ["command"] + sorted(props),
            "properties": {"command": _STR, **props}, "additionalProperties": False}


_IDENTITY = dict(lhs=_EXACT, rhs=_EXACT, holds=_BOOL, residual=_STR, spins=_STRS)

SCHEMAS = {
    "sixj": _obj(symbol=_STRS, admissible=_BOOL, value=_EXACT, decimal=_NUM_OR_STR),
    "threej": _obj(j=_STRS, m=_STRS, value=_EXACT, decimal=_NUM_OR_STR),
    "orbit": _obj(symbol=_STRS, regge=_BOOL, size=_INT, members=_STRS, value=_EXACT),
    "recouple": _obj(j=_STRS, j12=_STRS, j23=_STRS,
                     entries={"type": "array", "items": {"type": "array", "items": _EXACT}},
                     orthogonal=_BOOL),
    "probability": _obj(spins=_STRS, value=_STR, decimal=_NUM),
    "check-be": _obj(**_IDENTITY),
    "check-orth": _obj(**_IDENTITY),
    "geometry": {**_obj(lengths=_STRS, volume_sq=_STR, euclidean=_BOOL, volume=_NUM_OR_STR,
                        dihedral={"type": "array", "items": _NUM_OR_STR}),
                 "required": ["command", "euclidean", "lengths", "volume_sq"]},
    "asympt": _obj(symbol=_STRS, exact=_EXACT, exact_decimal=_NUM, volume_sq=_STR,
                   phase=_NUM_OR_STR, standard=_NUM_OR_STR, wigner=_NUM_OR_STR),
    "regge": _obj(complex=_STR, counts=_COUNTS, action=_NUM_OR_STR,
                  deficits={"type": "array", "items": {
                      "type": "object", "required": ["edge", "deficit"],
                      "properties": {"edge": {"type": "array", "items": _INT},
                                     "deficit": _NUM_OR_STR},
                      "additionalProperties": False}}),
    "qint": _obj(n=_INT, level=_INT, value=_NUM_OR_STR),
    "qsixj": _obj(symbol=_STRS, level=_INT, value=_NUM_OR_STR),
    "tv": _obj(complex=_STR, counts=_COUNTS, level=_INT, value=_NUM, w=_NUM,
               w_formula=_STR, colorings=_INT),
    "pr-sum": _obj(complex=_STR, counts=_COUNTS, cutoff=_STR, constant=_NUM,
                   **{"lambda": _NUM}, value=_NUM, colorings=_INT),
    "perm": _obj(n=_INT, permanent={"type": "string", "pattern": r"^-?\d+$"}),
    "incidence": _obj(n=_INT, edges={"type": "array", "items": {"type": "array", "items": _INT}},
                      matrix={"type": "array", "items": {"type": "string", "pattern": "^[01]*$"}}),
}


# --- parser -----------------------------------------------------------------------

_COMMANDS = {
    "sixj": (cmd_sixj, "exact 6j symbol {a b c; d e f}"),
    "threej": (cmd_threej, "exact 3j symbol (j1 j2 j3; m1 m2 m3)"),
    "orbit": (cmd_orbit, "symmetry orbit of a 6j symbol"),
    "recouple": (cmd_recouple, "recoupling matrix for j1 j2 j3 -> j"),
    "probability": (cmd_probability, "recoupling probability"),
    "check-be": (cmd_check_be, "Biedenharn-Elliott identity, both sides"),
    "check-orth": (cmd_check_orth, "6j orthogonality relation, both sides"),
    "geometry": (cmd_geometry, "tetrahedron volume and dihedral angles from six lengths"),
    "asympt": (cmd_asympt, "semiclassical estimates of a 6j symbol"),
    "regge": (cmd_regge, "3d Regge action of a triangulation with lengths"),
    "qint": (cmd_qint, "quantum integer [n] at level r"),
    "qsixj": (cmd_qsixj, "q-6j symbol at level r"),
    "tv": (cmd_tv, "Turaev-Viro invariant"),
    "pr-sum": (cmd_pr_sum, "Ponzano-Regge functional with spin cutoff"),
    "perm": (cmd_perm, "permanent of a 0/1 matrix (or of a graph's incidence matrix)"),
    "incidence": (cmd_incidence, "incidence matrix of a graph edge list"),
}


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "exact"), default="json",
                   help="output format (default json)")
    p.add_argument("--precision", type=int, default=None,
                   help="bits of precision for decimal output (>= 53)")
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker processes (default ${statesum.THREADS_ENV} or 1)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tetrasum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")
    common = _common()
    subs = {}
    for name, (fn, help_) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_, parents=[common], description=help_)
        p.set_defaults(func=fn)
        # spins such as -1/2 are values, not options
        p._negative_number_matcher = _NEGATIVE
        subs[name] = p
    for name, n in (("sixj", 6), ("orbit", 6), ("probability", 6), ("check-orth", 6),
                    ("asympt", 6), ("recouple", 4), ("check-be", 9)):
        subs[name].add_argument("spins", nargs=n, metavar="j")
    subs["orbit"].add_argument("--no-regge", action="store_true", help="classical symmetries only")
    subs["threej"].add_argument("values", nargs=6, metavar="j|m")
    subs["geometry"].add_argument("lengths", nargs=6, metavar="l")
    subs["regge"].add_argument("complex", help="builtin:<name> or a triangulation file")
    subs["qint"].add_argument("n", type=int)
    subs["qsixj"].add_argument("spins", nargs=6, metavar="j")
    for name in ("qint", "qsixj", "tv"):
        subs[name].add_argument("--level", type=int, required=True, help="level r >= 3")
    subs["tv"].add_argument("complex", help="builtin:<name> or a triangulation file")
    subs["pr-sum"].add_argument("complex", help="builtin:<name> or a triangulation file")
    subs["pr-sum"].add_argument("--cutoff", required=True, help="spin cutoff L (integer or n/2)")
    subs["pr-sum"].add_argument("--constant", type=float, default=1.0,
                                help="the constant C in Lambda = 4 L^3 / 3C (default 1)")
    subs["perm"].add_argument("input", help="file of 0/1 rows, or '-' for stdin")
    subs["perm"].add_argument("--graph", action="store_true",
                              help="read an edge list and use its incidence matrix")
    subs["incidence"].add_argument("input", help="edge-list file, or '-' for stdin")
    subs["incidence"].add_argument("--vertices", type=int, default=None,
                                   help="vertex count (default: largest label + 1)")
    return parser


def run(argv=None):
    """Parse and execute; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        _check_bits(args)
        doc, lines = args.func(args)
    except (DomainError, StructureError, OSError) as exc:
        return 1, "", f"tetrasum {args.command}: error: {exc}\n"
    if args.format == "exact":
        return 0, "\n".join(lines) + "\n", ""
    doc = {"command": args.command, **doc}
    return 0, json.dumps(doc, indent=2, sort_keys=True) + "\n", ""


def main(argv=None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
