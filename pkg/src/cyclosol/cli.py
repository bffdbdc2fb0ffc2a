"""Batch command-line front end.

Every subcommand prints one CommandResult: the command name, the parsed
parameters, an operation-specific payload and the elapsed time.  Payloads
are deterministic; only ``elapsed_ms`` varies between runs.

Exit codes: 0 success, 1 a verification reported a failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .combinat import SignedComposition, enumerate_signed_compositions, signed_partitions
from .rings import POLY, parse_q

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _sc(text: str) -> SignedComposition:
    try:
        return SignedComposition.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _r(value: int, minimum: int = 2) -> int:
    if value < minimum:
        raise InputError(f"r must be >= {minimum}, got {value}")
    return value


def _num(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    return int(v) if hasattr(v, "__index__") else v


def _ring_q(args, field: bool = False):
    try:
        ring, q = parse_q(args.q, args.mod)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if field and ring != POLY and not ring.is_field_like():
        raise InputError(f"a field is required; --mod {args.mod} is not prime")
    return ring, q


class Result:
    """Payload plus optional tabular form (for --out csv) and text form."""

    def __init__(self, payload, rows=None, text=None, ok=True):
        self.payload = payload
        self.rows = rows
        self.text = text
        self.ok = ok


# --------------------------------------------------------------------------
# handlers


def cmd_compositions(args) -> Result:
    if args.n < 0:
        raise InputError("n must be non-negative")
    items = signed_partitions(args.n) if args.partitions else enumerate_signed_compositions(args.n)
    payload = {"n": args.n, "count": len(items), "items": [m.to_json() for m in items]}
    rows = [["index", "composition"]] + [[i, str(m)] for i, m in enumerate(items)]
    return Result(payload, rows, "\n".join(str(m) for m in items))


def cmd_transversal(args) -> Result:
    from .cosets import coset_transversal, mak_transversal
    from .wreath import GroupElement, length, to_word

    mu, r = _sc(args.mu), _r(args.r)
    if args.mak:
        elems = sorted(mak_transversal(mu, r), key=GroupElement.sort_key)
    else:
        elems = list(coset_transversal(mu, r).elements)
    payload = {"mu": mu.to_json(), "r": r, "mak": args.mak, "count": len(elems), "elements": [g.to_json() for g in elems]}
    rows = [["length", "colours", "perm"]] + [
        [length(g), " ".join(map(str, g.colours)), " ".join(map(str, g.perm))] for g in elems
    ]
    text = "\n".join(f"{length(g):3d}  {' '.join(f'{v}^{c}' for v, c in to_word(g))}" for g in elems)
    return Result(payload, rows, text)


def cmd_doublecosets(args) -> Result:
    from .cosets import double_coset_families

    mu, nu = _sc(args.mu), _sc(args.nu)
    if mu.n != nu.n:
        raise InputError(f"degree mismatch: {mu} vs {nu}")
    fams = double_coset_families(mu, nu)
    payload = {"mu": mu.to_json(), "nu": nu.to_json(), "families": [f.to_json() for f in fams]}
    if args.r is not None:
        r = _r(args.r)
        payload["r"] = r
        payload["double_cosets"] = sum(f.double_coset_count(r) for f in fams)
        payload["minimal_elements"] = sum(r ** f.wt for f in fams)
    rows = [["d", "mu_cap_d_nu", "wt"]] + [[" ".join(map(str, f.perm)), str(f.intersection_left), f.wt] for f in fams]
    text = "\n".join(f"d={list(f.perm)}  {f.intersection_left}  wt={f.wt}" for f in fams)
    return Result(payload, rows, text)


def cmd_constants(args) -> Result:
    from .structconst import structure_constants

    mu, nu = _sc(args.mu), _sc(args.nu)
    if mu.n != nu.n:
        raise InputError(f"degree mismatch: {mu} vs {nu}")
    sc = structure_constants(mu, nu, args.method)
    payload = sc.to_json()
    rows = [["sigma", "poly", "pretty"]] + [[str(s), json.dumps(p.to_json()), p.pretty()] for s, p in sc.terms]
    if args.q is not None:
        ring, q = _ring_q(args)
        values = [(s, ring.evaluate(p, q)) for s, p in sc.terms]
        values = [(s, v) for s, v in values if not ring.is_zero(v)]
        payload["q"] = ring.to_json(q)
        payload["ring"] = ring.name()
        payload["values"] = [{"sigma": s.to_json(), "value": ring.to_json(v)} for s, v in values]
    text = " + ".join(f"({p.pretty()})E{s}" for s, p in sc.terms) or "0"
    return Result(payload, rows, text)


def _element(alg, spec: str):
    """'3,-2' is a basis element; otherwise a JSON list of [coeff, [parts]]."""
    spec = spec.strip()
    try:
        if spec.startswith("[["):
            data = json.loads(spec)
            return alg.element({SignedComposition(m): alg.ring.coerce(Fraction(str(c))) for c, m in data})
        return alg.E(_sc(spec))
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad element {spec!r}: {exc}") from None


def cmd_product(args) -> Result:
    from .solalg import algebra

    ring, q = _ring_q(args)
    a_probe = args.a.strip()
    if a_probe.startswith("[["):
        n = SignedComposition(json.loads(a_probe)[0][1]).n
    else:
        n = _sc(a_probe).n
    alg = algebra(n, ring, q)
    a, b = _element(alg, args.a), _element(alg, args.b)
    prod = a * b
    payload = {"a": a.to_json(), "b": b.to_json(), "product": prod.to_json()}
    rows = [["sigma", "coeff"]] + [[str(s), json.dumps(ring.to_json(c))] for s, c in prod.items()]
    return Result(payload, rows, prod.pretty())


def cmd_chartable(args) -> Result:
    from .reptheory import character_table

    ring, q = _ring_q(args, field=True)
    table = character_table(args.n, q, ring)
    text_rows = table.to_csv_rows()
    width = max(len(c) for row in text_rows for c in row)
    text = "\n".join(" ".join(c.rjust(width) for c in row) for row in text_rows)
    return Result(table.to_json(), text_rows, text)


def cmd_radical(args) -> Result:
    from .reptheory import irreducible_labels, radical_basis

    ring, q = _ring_q(args, field=True)
    if ring == POLY:
        raise InputError("radical needs a numeric q")
    rb = radical_basis(args.n, q, ring)
    payload = rb.to_json()
    payload["irreducibles"] = [lam.to_json() for lam in irreducible_labels(args.n, q, ring)]
    rows = [["kind", "element"]]
    rows += [["difference", f"E{a}-E{b}"] for a, b in rb.difference_elements]
    rows += [["degenerate", f"E{a}"] for a in rb.degenerate_elements]
    text = "\n".join(r[1] for r in rows[1:]) + f"\nquotient dimension {rb.quotient_dimension}"
    return Result(payload, rows, text)


def cmd_hopf(args) -> Result:
    from . import hopf

    if args.hopf_cmd == "coproduct":
        mu = _sc(args.mu)
        t = hopf.coproduct(hopf.GradedElement.E(mu))
        rows = [["left", "right", "coeff"]] + [[str(k[0]), str(k[1]), _num(c)] for k, c in t.items()]
        text = " + ".join(f"{_num(c)}*E{k[0]}(x)E{k[1]}" for k, c in t.items())
        return Result({"mu": mu.to_json(), "coproduct": t.to_json()}, rows, text)
    if args.hopf_cmd == "primitive":
        if args.k == 0:
            raise InputError("k must be non-zero")
        p = hopf.primitive_generator(args.k)
        rows = [["mu", "coeff"]] + [[str(m), str(c)] for m, c in p.items()]
        text = " + ".join(f"({c})E{m}" for m, c in p.items())
        return Result({"k": args.k, "element": p.to_json()}, rows, text)
    if args.hopf_cmd == "antipode":
        mu = _sc(args.mu)
        s = hopf.antipode(hopf.GradedElement.E(mu))
        rows = [["mu", "coeff"]] + [[str(m), str(c)] for m, c in s.items()]
        return Result({"mu": mu.to_json(), "antipode": s.to_json()}, rows, " + ".join(f"({c})E{m}" for m, c in s.items()))
    # verify
    if args.max_degree < 0:
        raise InputError("max-degree must be non-negative")
    checks = hopf.verify_hopf(args.max_degree)
    ok = all(v for _, v in checks)
    rows = [["check", "passed"]] + [[k, v] for k, v in checks]
    text = "\n".join(f"{'ok  ' if v else 'FAIL'} {k}" for k, v in checks)
    return Result({"max_degree": args.max_degree, "checks": [{"name": k, "passed": v} for k, v in checks], "ok": ok}, rows, text, ok)


SUITES = ("products", "transversals", "coproduct", "hopf", "mak", "diagonal")


def cmd_verify(args) -> Result:
    from . import oracle

    r, n = _r(args.r), args.n
    if n < 1:
        raise InputError("n must be positive")
    suites = SUITES if args.suite == "all" else (args.suite,)
    report = {}
    try:
        for suite in suites:
            report[suite] = _run_suite(suite, r, n)
    except oracle.BoundExceeded as exc:
        raise InputError(str(exc)) from None
    ok = all(v["ok"] for v in report.values())
    rows = [["suite", "ok"]] + [[k, v["ok"]] for k, v in report.items()]
    text = "\n".join(f"{'ok  ' if v['ok'] else 'FAIL'} {k}" for k, v in report.items())
    return Result({"r": r, "n": n, "suites": report, "ok": ok}, rows, text, ok)


def _run_suite(suite: str, r: int, n: int) -> dict:
    from . import oracle
    from .cosets import coset_transversal

    comps = enumerate_signed_compositions(n)
    if suite == "products":
        bad = oracle.verify_products(r, n)
        return {"ok": not bad, "mismatches": [[a.to_json(), b.to_json()] for a, b in bad]}
    if suite == "transversals":
        bad = [m for m in comps if oracle.brute_force_transversal(m, r) != list(coset_transversal(m, r).elements)]
        return {"ok": not bad, "mismatches": [m.to_json() for m in bad]}
    if suite == "coproduct":
        bad = [m for k in range(1, n + 1) for m in enumerate_signed_compositions(k) if not oracle.verify_group_coproduct(m, r)]
        return {"ok": not bad, "mismatches": [m.to_json() for m in bad]}
    if suite == "hopf":
        from .hopf import verify_hopf

        checks = verify_hopf(n)
        return {"ok": all(v for _, v in checks), "checks": {k: v for k, v in checks}}
    if suite == "mak":
        rep = oracle.mak_closure_check(n, r)
        out = rep.to_json()
        out["ok"] = rep.closed
        return out
    if suite == "diagonal":
        from .structconst import discrepancy_report

        rows = discrepancy_report(n)
        return {
            "ok": all(d.consistent for d in rows),
            "flagged": [d.lam.to_json() for d in rows if d.flagged],
            "rows": [d.to_json() for d in rows],
        }
    raise InputError(f"unknown suite {suite!r}")


# --------------------------------------------------------------------------
# argument parsing and output


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--json", action="store_const", const="json", dest="out")
    common.add_argument("--cache", metavar="DIR", help="structure-constant disk cache directory")

    qopts = _Parser(add_help=False)
    qopts.add_argument("--q", default="x", help="integer, p/q, or x (symbolic)")
    qopts.add_argument("--mod", type=int, default=None, help="work in Z/m")

    p = _Parser(prog="cyclosol", description="Cyclotomic Solomon algebras: batch computations.")
    p.add_argument("--version", action="version", version=f"cyclosol {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("compositions", parents=[common], help="list signed compositions of n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--partitions", action="store_true", help="signed partitions only")
    s.set_defaults(func=cmd_compositions)

    s = sub.add_parser("transversal", parents=[common], help="distinguished right coset representatives")
    s.add_argument("--mu", required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--mak", action="store_true", help="Mak's representatives instead")
    s.set_defaults(func=cmd_transversal)

    s = sub.add_parser("doublecosets", parents=[common], help="double coset families")
    s.add_argument("--mu", required=True)
    s.add_argument("--nu", required=True)
    s.add_argument("--r", type=int, default=None)
    s.set_defaults(func=cmd_doublecosets)

    s = sub.add_parser("constants", parents=[common], help="structure constants d_{mu nu sigma}(x)")
    s.add_argument("--mu", required=True)
    s.add_argument("--nu", required=True)
    s.add_argument("--method", choices=("auto", "cosets", "matrices"), default="auto")
    s.add_argument("--q", default=None, help="also evaluate at q")
    s.add_argument("--mod", type=int, default=None)
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("product", parents=[common, qopts], help="multiply two elements of Sol_q(n)")
    s.add_argument("--a", required=True, help="'3,-2' or JSON [[coeff,[parts]],...]")
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("chartable", parents=[common, qopts], help="character table C_q(n)")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_chartable)

    s = sub.add_parser("radical", parents=[common, qopts], help="basis of the radical of Sol_q(n)")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_radical)

    s = sub.add_parser("hopf", help="Hopf algebra operations")
    hs = s.add_subparsers(dest="hopf_cmd", required=True, parser_class=_Parser)
    h = hs.add_parser("coproduct", parents=[common])
    h.add_argument("--mu", required=True)
    h = hs.add_parser("primitive", parents=[common])
    h.add_argument("--k", type=int, required=True)
    h = hs.add_parser("antipode", parents=[common])
    h.add_argument("--mu", required=True)
    h = hs.add_parser("verify", parents=[common])
    h.add_argument("--max-degree", type=int, default=4)
    s.set_defaults(func=cmd_hopf)

    s = sub.add_parser("verify", parents=[common], help="brute-force checks against the group algebra")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.set_defaults(func=cmd_verify)
    return p


def _params(args) -> dict:
    skip = {"func", "out", "cache", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def _render(args, result: Result, envelope: dict) -> str:
    if args.out == "csv":
        if result.rows is None:
            raise InputError("this command has no CSV form")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(result.rows)
        return buf.getvalue().rstrip("\n")
    if args.out == "pretty":
        return result.text if result.text is not None else json.dumps(result.payload, indent=2)
    return json.dumps(envelope, sort_keys=True)


_VALUE_FLAGS = {"--mu", "--nu", "--a", "--b", "--k", "--q"}


def _glue(argv: list) -> list:
    """Attach values such as '-2,-2,1' to their flag; argparse would
    otherwise read them as options."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None) -> tuple:
    """Parse and execute; returns (exit code, output text)."""
    argv = _glue(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        return EXIT_INPUT, f"error: {exc}"
    if getattr(args, "cache", None):
        from .structconst import CACHE

        CACHE.set_directory(args.cache)
    command = args.command if args.command != "hopf" else f"hopf {args.hopf_cmd}"
    start = time.perf_counter()
    try:
        result = args.func(args)
        envelope = {
            "command": command,
            "parameters": _params(args),
            "payload": result.payload,
            "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
        }
        text = _render(args, result, envelope)
    except (InputError, ValueError) as exc:
        return EXIT_INPUT, f"error: {exc}"
    return (EXIT_OK if result.ok else EXIT_FAILED), text


def main(argv=None) -> int:
    code, text = run(argv)
    stream = sys.stdout if code != EXIT_INPUT else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
