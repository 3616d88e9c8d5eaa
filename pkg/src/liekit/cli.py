"""Single command-line entry point: `liekit SUBCOMMAND ...`.

Output goes to stdout (text by default, machine-readable with
--format json; JSON payloads carry a "schema": "liekit/1" key).
Diagnostics go to stderr. Exit codes: 0 success, 2 invalid input,
3 resource-cap exceeded.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import chars, cohomology, freelie, liealg, rootsys, symfun, voganforms, weyl
from .errors import LiekitError, ResourceCapError, ValidationError

SCHEMA = "liekit/1"


def _weight(text):
    return tuple(int(x) for x in text.split(","))


def _partition(text):
    if not text or text in ("0", "-"):
        return ()
    return tuple(int(x) for x in text.split(","))


def _frac_str(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _emit(args, payload, text_lines):
    if args.format == "json":
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _poly_str(coeffs, var="q"):
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*{var}" if c != 1 else var)
        else:
            terms.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(terms) if terms else "0"


def _bracket_str(b):
    if isinstance(b, int):
        return "xy"[b] if b < 2 else f"x{b}"
    return f"[{_bracket_str(b[0])},{_bracket_str(b[1])}]"


def _parse_algebra(args):
    if getattr(args, "file", None):
        return liealg.from_file(args.file)
    name = args.algebra
    n = args.n
    table = {
        "sl": lambda: liealg.sl(n),
        "so": lambda: liealg.so(n),
        "sp": lambda: liealg.sp(n),
        "upper": lambda: liealg.upper_triangular(n),
        "strictly-upper": lambda: liealg.strictly_upper_triangular(n),
        "abelian": lambda: liealg.abelian(n),
        "heisenberg": liealg.heisenberg,
    }
    if name not in table:
        raise ValidationError(f"unknown algebra {name!r}")
    if name != "heisenberg" and n is None:
        raise ValidationError(f"algebra {name!r} needs a size argument")
    return table[name]()


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="liekit",
        description="Exact computations in Lie theory: root systems, characters, "
        "free Lie series, cohomology, symmetric functions, real forms.",
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--seed", type=int, default=0, help="property-test replay seed")
    parser.add_argument("--max-dim", type=int, default=chars.DEFAULT_DIM_CAP)
    parser.add_argument("--max-order", type=int, default=freelie.DEFAULT_BCH_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="roots of a Dynkin type")
    p.add_argument("type")
    p.add_argument("--count", action="store_true")

    for name in ("exponents", "coxeter", "minuscule", "pq", "weyl-order"):
        p = sub.add_parser(name)
        p.add_argument("type")

    p = sub.add_parser("orbit", help="Weyl orbit of a weight")
    p.add_argument("type")
    p.add_argument("weight")

    for name in ("char", "dim", "qdim", "fstype"):
        p = sub.add_parser(name)
        p.add_argument("type")
        p.add_argument("weight")

    p = sub.add_parser("tensor")
    p.add_argument("type")
    p.add_argument("weight1")
    p.add_argument("weight2")

    p = sub.add_parser("bch", help="Baker-Campbell-Hausdorff coefficients")
    p.add_argument("--order", type=int, default=3)
    p.add_argument(
        "--basis", choices=["lyndon", "words"], default="lyndon",
        help="report Lyndon-bracket coordinates or raw word coefficients",
    )

    p = sub.add_parser("witt", help="free Lie algebra dimensions")
    p.add_argument("n", type=int)
    p.add_argument("--upto", type=int, default=10)

    p = sub.add_parser("lie-check", help="solvable/nilpotent/semisimple predicates")
    p.add_argument("algebra", nargs="?", default=None)
    p.add_argument("n", nargs="?", type=int, default=None)
    p.add_argument("--file")

    p = sub.add_parser("cohomology", help="Chevalley-Eilenberg Betti numbers")
    p.add_argument("algebra", nargs="?", default=None)
    p.add_argument("n", nargs="?", type=int, default=None)
    p.add_argument("--file")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--invariants", action="store_true",
                   help="compute invariant-form dimensions instead")

    p = sub.add_parser("schur")
    p.add_argument("partition")
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--dim", type=int, default=None, dest="dim_at")

    p = sub.add_parser("frobenius")
    p.add_argument("partition")
    p.add_argument("cycles")

    p = sub.add_parser("qbinom")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("betti")
    p.add_argument("space", choices=["grassmannian", "flag", "partial", "cp"])
    p.add_argument("params", nargs="+")

    p = sub.add_parser("realforms")
    p.add_argument("--type", dest="dynkin", default=None)
    p.add_argument("--list", action="store_true")
    p.add_argument("--file", help="classify a Vogan diagram JSON file")

    p = sub.add_parser("selftest", help="run the property suites end to end")
    p.add_argument("--quick", action="store_true")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _dispatch(args)
    except ResourceCapError as exc:
        print(f"liekit: {exc}", file=sys.stderr)
        return 3
    except LiekitError as exc:
        print(f"liekit: {exc}", file=sys.stderr)
        return 2


def _dispatch(args):
    cmd = args.command
    if cmd == "roots":
        rs = rootsys.build(args.type)
        if args.count:
            _emit(args, {"type": args.type, "count": len(rs.roots)}, [str(len(rs.roots))])
        else:
            lines = [" ".join(map(str, r)) for r in rs.roots]
            _emit(args, {"type": args.type, "roots": [list(r) for r in rs.roots]}, lines)
    elif cmd == "exponents":
        rs = rootsys.build(args.type)
        e = list(rs.exponents())
        _emit(args, {"type": args.type, "exponents": e}, [" ".join(map(str, e))])
    elif cmd == "coxeter":
        rs = rootsys.build(args.type)
        h, hv = rs.coxeter_numbers()
        _emit(args, {"type": args.type, "h": h, "h_dual": hv}, [f"h={h} h_dual={hv}"])
    elif cmd == "minuscule":
        rs = rootsys.build(args.type)
        ws = rs.minuscule_weights()
        _emit(
            args,
            {"type": args.type, "minuscule": [list(w) for w in ws]},
            [" ".join(map(str, w)) for w in ws],
        )
    elif cmd == "pq":
        rs = rootsys.build(args.type)
        q = rs.weight_lattice_quotient()
        text = " x ".join(f"Z/{f}" for f in q) if q else "trivial"
        _emit(args, {"type": args.type, "invariant_factors": q}, [text])
    elif cmd == "weyl-order":
        rs = rootsys.build(args.type)
        order = weyl.group_order(rs)
        _emit(args, {"type": args.type, "order": order}, [str(order)])
    elif cmd == "orbit":
        rs = rootsys.build(args.type)
        orb = weyl.orbit(rs, _weight(args.weight))
        lines = [" ".join(map(str, w)) for w in orb]
        _emit(args, {"orbit": [[_frac_str(x) for x in w] for w in orb]}, lines)
    elif cmd == "char":
        rs = rootsys.build(args.type)
        chi = chars.character(rs, _weight(args.weight), cap=args.max_dim)
        items = sorted(chi.items())
        lines = [f"{' '.join(map(str, w))}  {m}" for w, m in items]
        _emit(
            args,
            {"character": [{"weight": list(w), "mult": m} for w, m in items]},
            lines,
        )
    elif cmd == "dim":
        rs = rootsys.build(args.type)
        d = chars.dimension(rs, _weight(args.weight))
        _emit(args, {"dim": d}, [str(d)])
    elif cmd == "qdim":
        rs = rootsys.build(args.type)
        q = chars.q_dimension(rs, _weight(args.weight))
        _emit(args, {"qdim": q}, [_poly_str(q)])
    elif cmd == "fstype":
        rs = rootsys.build(args.type)
        t = chars.frobenius_schur_type(rs, _weight(args.weight))
        _emit(args, {"fstype": t}, [t])
    elif cmd == "tensor":
        rs = rootsys.build(args.type)
        dec = chars.tensor_decompose(
            rs, _weight(args.weight1), _weight(args.weight2)
        )
        items = sorted(dec.items())
        lines = [f"{' '.join(map(str, w))}  {m}" for w, m in items]
        _emit(
            args,
            {"tensor": [{"weight": list(w), "mult": m} for w, m in items]},
            lines,
        )
    elif cmd == "bch":
        if args.order > args.max_order:
            from .errors import TooDeep

            raise TooDeep(f"order {args.order} exceeds --max-order {args.max_order}")
        if args.basis == "lyndon":
            elt = freelie.bch(args.order, cap=args.max_order)
            items = sorted(
                elt.coords.items(),
                key=lambda kv: (len(freelie.bracket_word(kv[0])), freelie.bracket_word(kv[0])),
            )
            lines = [f"{_frac_str(c)}  {_bracket_str(b)}" for b, c in items]
            payload = [
                {
                    "degree": len(freelie.bracket_word(b)),
                    "bracket": _bracket_str(b),
                    "coeff": _frac_str(c),
                }
                for b, c in items
            ]
            _emit(args, {"bch": payload}, lines)
        else:
            x = freelie.generator(2, args.order, 0)
            y = freelie.generator(2, args.order, 1)
            series = freelie.log(freelie.exp(x) * freelie.exp(y))
            items = sorted(series.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
            lines = [
                f"{_frac_str(c)}  {''.join('xy'[i] for i in w)}" for w, c in items
            ]
            payload = [
                {"word": "".join("xy"[i] for i in w), "coeff": _frac_str(c)}
                for w, c in items
            ]
            _emit(args, {"bch_words": payload}, lines)
    elif cmd == "witt":
        dims = freelie.witt_dimensions(args.n, args.upto)
        _emit(
            args,
            {"witt": dims, "alphabet": args.n},
            [" ".join(map(str, dims))],
        )
    elif cmd == "lie-check":
        g = _parse_algebra(args)
        result = {
            "dim": g.dim,
            "solvable": g.is_solvable(),
            "nilpotent": g.is_nilpotent(),
            "semisimple": g.is_semisimple(),
        }
        lines = [f"{k}: {v}" for k, v in result.items()]
        _emit(args, result, lines)
    elif cmd == "cohomology":
        g = _parse_algebra(args)
        if args.invariants:
            poly = cohomology.invariant_forms_poincare(g)
            _emit(args, {"invariant_forms": poly}, [_poly_str(poly)])
        else:
            degrees = None if args.degree is None else [args.degree]
            betti = cohomology.ce_cohomology(g, degrees=degrees)
            poly = [betti.get(k, 0) for k in range(max(betti) + 1)]
            lines = [f"H^{k} = {v}" for k, v in sorted(betti.items())]
            _emit(args, {"betti": {str(k): v for k, v in betti.items()}}, lines)
    elif cmd == "schur":
        lam = _partition(args.partition)
        if args.dim_at is not None:
            _emit(
                args,
                {"dim": symfun.schur_dim(lam, args.dim_at)},
                [str(symfun.schur_dim(lam, args.dim_at))],
            )
        else:
            nvars = args.vars if args.vars is not None else max(len(lam), 1)
            poly = symfun.schur_poly(lam, nvars)
            items = sorted(poly.items())
            lines = [f"{c}  x^{list(e)}" for e, c in items]
            _emit(
                args,
                {"schur": [{"exponents": list(e), "coeff": str(c)} for e, c in items]},
                lines,
            )
    elif cmd == "frobenius":
        lam = _partition(args.partition)
        cycles = _partition(args.cycles)
        val = symfun.frobenius_character(lam, cycles)
        _emit(args, {"character": val}, [str(val)])
    elif cmd == "qbinom":
        poly = symfun.gaussian_binomial(args.m, args.n)
        _emit(args, {"qbinom": poly}, [_poly_str(poly)])
    elif cmd == "betti":
        sp = args.space
        params = [int(x) for x in args.params]
        if sp == "grassmannian":
            b = symfun.grassmannian_betti(*params[:2])
        elif sp == "flag":
            b = symfun.flag_betti(params[0])
        elif sp == "cp":
            b = symfun.projective_space_betti(params[0])
        else:
            b = symfun.partial_flag_betti(params[0], params[1:])
        _emit(args, {"betti": b}, [" ".join(map(str, b))])
    elif cmd == "realforms":
        if args.file:
            with open(args.file) as fh:
                data = json.load(fh)
            types = rootsys.parse_type(data["type"])
            if len(types) != 1:
                raise ValidationError("Vogan diagrams want a simple type")
            family, rank = types[0]
            colors = [int(k) for k, v in data.get("colors", {}).items() if v == "black"]
            vd = voganforms.diagram(
                family, rank, colors=colors, involution=data.get("involution")
            )
            desc = voganforms.classify(vd)
            lines = [
                f"{desc.name}  dim_k={desc.dim_k} dim_p={desc.dim_p} "
                f"signature={desc.signature} k={desc.k_description}"
            ]
            _emit(args, {"form": desc.__dict__ | {"representative": list(desc.representative), "signature": list(desc.signature)}}, lines)
        else:
            types = rootsys.parse_type(args.dynkin)
            if len(types) != 1:
                raise ValidationError("real forms are enumerated per simple type")
            family, rank = types[0]
            forms = voganforms.enumerate_real_forms(family, rank)
            lines = [
                f"{f.name:14s} dim_k={f.dim_k:4d} dim_p={f.dim_p:4d} "
                f"k={f.k_description}" for f in forms
            ]
            payload = [
                {
                    "name": f.name,
                    "inner": f.inner,
                    "dim_k": f.dim_k,
                    "dim_p": f.dim_p,
                    "signature": list(f.signature),
                    "k": f.k_description,
                }
                for f in forms
            ]
            _emit(args, {"forms": payload}, lines)
    elif cmd == "selftest":
        from . import selftest

        return selftest.run(seed=args.seed, quick=args.quick)
    return 0


if __name__ == "__main__":
    sys.exit(main())
