"""drinfeld: command-line front end.

    drinfeld genus --q 3 --n "T^2+1"
    drinfeld cusps --q 3 --n "(T^2+1)^2" --flavor gl
    drinfeld graph --q 3 --n "T^2+1" --flavor sl --dot out.dot
    drinfeld equation --q 3 --p "T^2+T+2"
    drinfeld equation --q 3 --n "T^2+T"
    drinfeld expansions --q 3 --p "T^2+T+2" --terms 12
    drinfeld verify
    drinfeld verify --q 5 --p "T^2+T+2" --claims conductor,kodaira

Errors are printed to stderr as one JSON object and the exit status is
nonzero (2 for bad arguments, 1 for everything else).
"""

import argparse
import json
import sys

from .algebra import ParseError, PrecisionError, parse_poly, prime_power


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _odd_q(q):
    prime_power(q)
    if q % 2 == 0:
        raise UsageError(f"q = {q} must be odd for this command")
    return q


def _q(value):
    try:
        q = int(value)
        prime_power(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a prime power")
    return q


def _level(args, name="n"):
    text = getattr(args, name)
    if text is None:
        raise UsageError(f"--{name} is required")
    f = parse_poly(text, args.q)
    if f.deg < 1:
        raise UsageError(f"--{name} must be non-constant")
    return f.monic()


def _emit(args, payload, table):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(table)


def _table(rows):
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


# subcommands -----------------------------------------------------------------


def cmd_genus(args):
    from .genus import genus_report

    _odd_q(args.q)
    rep = genus_report(_level(args))
    d = rep.as_dict()
    _emit(args, d, _table([(k, str(v)) for k, v in d.items()]))
    return 0


def cmd_cusps(args):
    from .orbits import cusp_orbits
    from .projline import ProjectiveLine

    if args.flavor == "sl":
        _odd_q(args.q)
    n = _level(args)
    line = ProjectiveLine(n)
    dec = cusp_orbits(line, args.flavor)
    rows = [o.as_dict() for o in dec]
    body = [f"{'cusp':<24} {'tag':<10} {'length':>6} {'stab':>5}  heights"]
    for o in rows:
        body.append(f"{o['representative']:<24} {o['type']:<10} {o['length']:>6} {o['stabilizer']:>5}  {o['heights']}")
    _emit(args, {"n": str(n), "q": args.q, "flavor": args.flavor, "cusps": rows}, "\n".join(body))
    return 0


def cmd_graph(args):
    from .tree import build_graph, export_dot

    if args.flavor == "sl":
        _odd_q(args.q)
    g = build_graph(_level(args), args.flavor)
    if args.dot:
        text = export_dot(g)
        if args.dot == "-":
            sys.stdout.write(text)
            return 0
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
    layers = [len(g.layer_vertices(i)) for i in range(g.top + 1)]
    table = _table(
        [
            ("n", str(g.n)),
            ("flavor", g.flavor),
            ("vertices per layer", str(layers)),
            ("edges", str(len(g.edges))),
            ("betti", str(g.betti)),
            ("cusps", ", ".join(g.cusp_labels())),
        ]
    )
    _emit(args, g.as_dict(), table)
    return 0


def cmd_equation(args):
    if (args.p is None) == (args.n is None):
        raise UsageError("give exactly one of --p or --n")
    if args.p is not None:
        return _equation_prime(args)
    return _equation_level(args)


def _equation_prime(args):
    from .forms import solve_f, weierstrass_from_f

    p = _level(args, "p")
    sol = solve_f(p)
    out = {"q": args.q, "p": str(p), "f": sol.f.to_str(), "relation": f"j·x^{args.q ** 2} = f(x)"}
    rows = [("p", str(p)), ("f(x)", sol.f.to_str())]
    if args.q % 2:
        model = weierstrass_from_f(sol.f)
        out["weierstrass"] = model.equation()
        out["curve"] = model.curve().as_dict()
        rows.append(("X0^1(p)", model.equation()))
    _emit(args, out, _table(rows))
    return 0


def _equation_level(args):
    from .elliptic import conductor
    from .ttlevel import ab_product, cyclic_t_relation, models_for_level, verify_parametrization

    _odd_q(args.q)
    n = _level(args)
    E1, E2 = models_for_level(n)
    checks = dict(cyclic_t_relation(args.q).checks)
    checks.update(verify_parametrization(args.q))
    checks["a·b product identity"] = ab_product(args.q).holds
    c1, c2 = conductor(E1.curve()), conductor(E2.curve())
    out = {
        "q": args.q,
        "n": str(n),
        "E1": E1.equation(),
        "E2": E2.equation(),
        "conductor_E1": str(c1),
        "conductor_E2": str(c2),
        "checks": checks,
    }
    rows = [("n", str(n)), ("E1", E1.equation()), ("  conductor", str(c1)), ("E2", E2.equation()), ("  conductor", str(c2))]
    rows += [(k, "ok" if v else "FAILED") for k, v in checks.items()]
    _emit(args, out, _table(rows))
    return 0 if all(checks.values()) else 1


def cmd_expansions(args):
    from .forms import delta_coefficients, eta_expansion, j_expansion

    q = _odd_q(args.q)
    p = _level(args, "p")
    N = args.terms
    delta = delta_coefficients(q, N)
    eta = eta_expansion(p, N + 1)
    j = j_expansion(q, N + 1)
    out = {
        "q": q,
        "p": str(p),
        "delta": {str(i): str(c) for i, c in sorted(delta.items()) if c},
        "eta": {str(k): str(eta[k]) for k in range(-1, N - 1) if eta[k]},
        "j": {str(k): str(j[k]) for k in range(-1, N - 1) if j[k]},
    }
    lines = ["Δ = Σ δ_i t^((q-1)i):"]
    lines += [f"  δ_{i} = {v}" for i, v in out["delta"].items()]
    for name in ("eta", "j"):
        lines.append(f"{name}(s):")
        lines += [f"  s^{k}: {v}" for k, v in out[name].items()]
    _emit(args, out, "\n".join(lines))
    return 0


def cmd_verify(args):
    if args.p is not None:
        return _verify_curve(args)
    from .acceptance import run_checks

    ids = {int(x) for x in args.only.split(",")} if args.only else None
    results = run_checks(ids)
    lines = [f"[{'PASS' if r.passed else 'FAIL'}] {r.id:>2}. {r.name} ({r.seconds}s): {r.detail}" for r in results]
    _emit(args, {"results": [r.as_dict() for r in results]}, "\n".join(lines))
    return 0 if all(r.passed for r in results) else 1


def _verify_curve(args):
    from .elliptic import conductor, extremal_type_check, x01_curve

    _odd_q(args.q)
    p = _level(args, "p")
    claims = set((args.claims or "conductor,kodaira").split(","))
    unknown = claims - {"conductor", "kodaira", "extremal"}
    if unknown:
        raise UsageError(f"unknown claims {sorted(unknown)}")
    E = x01_curve(p)
    c = conductor(E)
    out = {"q": args.q, "p": str(p), "curve": str(E), "places": [ld.as_dict() for ld in c.local]}
    rows = [("curve", str(E))]
    ok = True
    if "conductor" in claims:
        holds = c.exponents == {str(p): 1, "∞": 2}
        ok &= holds
        out["conductor"] = {"value": str(c), "degree": c.degree, "holds": holds}
        rows += [("conductor", f"{c} {'ok' if holds else 'FAILED'}"), ("degree", str(c.degree))]
    if "kodaira" in claims:
        types = [ld.kodaira for ld in c.local]
        holds = types == ["I2", "I2*"]
        ok &= holds
        out["kodaira"] = {"types": types, "holds": holds}
        for ld in c.local:
            rows.append((f"at {ld.place}", f"{ld.kodaira}, f={ld.conductor_exponent}, c={ld.tamagawa}"))
    if "extremal" in claims:
        if p.deg != 2:
            raise UsageError("the extremal claim needs deg p = 2")
        holds, types = extremal_type_check(E, p)
        ok &= holds
        out["extremal"] = {"holds": holds, "types": list(types)}
        rows.append(("over F_(q^2)", f"{types} {'ok' if holds else 'FAILED'}"))
    _emit(args, out, _table(rows))
    return 0 if ok else 1


# wiring ----------------------------------------------------------------------


def build_parser():
    ap = _Parser(prog="drinfeld", description="Drinfeld modular curves X0^1(n) over F_q(T).")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, n=False, p=False, flavor=False):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--q", type=_q, required=True)
        if n:
            sp.add_argument("--n", help='level, e.g. "T^2+1"')
        if p:
            sp.add_argument("--p", help='monic prime, e.g. "T^2+T+2"')
        if flavor:
            sp.add_argument("--flavor", choices=("sl", "gl"), default="sl")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    add("genus", cmd_genus, "genus, cusp count and related invariants", n=True)
    add("cusps", cmd_cusps, "cusp orbits with labels and tags", n=True, flavor=True)
    g = add("graph", cmd_graph, "quotient graph of the Bruhat-Tits tree", n=True, flavor=True)
    g.add_argument("--dot", metavar="PATH", help="write Graphviz DOT ('-' for stdout)")
    add("equation", cmd_equation, "equations of X0(p) / models for n = pp'", n=True, p=True)
    e = add("expansions", cmd_expansions, "Δ, η and j expansions", p=True)
    e.add_argument("--terms", type=int, default=12)
    v = sub.add_parser("verify", help="run the acceptance checks, or check one curve")
    v.add_argument("--q", type=_q)
    v.add_argument("--p")
    v.add_argument("--claims", help="comma list of conductor, kodaira, extremal")
    v.add_argument("--only", help="comma list of check numbers")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return ap


def _fail(kind, exc, code):
    print(json.dumps({"error": kind, "message": str(exc)}, ensure_ascii=False), file=sys.stderr)
    return code


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify" and args.p is not None and args.q is None:
            raise UsageError("--p needs --q")
        return args.func(args)
    except UsageError as exc:
        return _fail("usage", exc, 2)
    except ParseError as exc:
        return _fail("parse", exc, 2)
    except PrecisionError as exc:
        return _fail("precision", exc, 1)
    except (ValueError, ArithmeticError) as exc:
        return _fail(type(exc).__name__, exc, 1)


if __name__ == "__main__":
    sys.exit(main())
