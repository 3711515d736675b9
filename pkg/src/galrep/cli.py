"""Command line interface: ``galrep <subcommand> ...``.

Output is JSON by default (``--plain`` for text).  Exit codes: 0 success or
affirmative verdict, 1 negative verdict, 2 input error, 3 undecided or
refused for budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import faltings_sim as fs
from .cyclotomic import CycQ
from .linalg import char_poly
from .local_bound import LocalFieldParams, paper_m_bound, roots_of_unity_bound
from .newton import compositions, d_m, dim_lambda, m_trace_from_charpoly, newton_coefficient
from .poteq import ClosureTooLarge, Status, m_character, pe_decide, twist_equivalent_finite
from .repfile import RepFileError, parse_rep_file
from .weil import BudgetExceeded, enumerate_weil

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3
EXPAND_DIGITS = 1000

_STATUS_EXIT = {
    Status.EQUIVALENT: EXIT_OK,
    Status.NOT_EQUIVALENT: EXIT_NEGATIVE,
    Status.UNDECIDED: EXIT_UNDECIDED,
}


class InputError(Exception):
    pass


def _cyc(a: CycQ) -> dict:
    return {"order": a.order, "coeffs": [f"{c.numerator}/{c.denominator}" for c in a.coeffs], "text": str(a)}


def _word(text: str) -> tuple:
    if not text.strip():
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"word must be comma-separated integers, got {text!r}") from None


# --- subcommands --------------------------------------------------------------
# each returns (payload, plain_lines, exit_code)


def cmd_check_pe(args):
    v = pe_decide(parse_rep_file(args.rep1), parse_rep_file(args.rep2), depth=args.depth)
    payload = {
        "status": v.status.value,
        "witness_m": v.witness_m,
        "counterexample": list(v.counterexample) if v.counterexample is not None else None,
        "bound": v.bound,
        "certificate": v.certificate,
    }
    line = v.status.value
    if v.witness_m is not None:
        line += f" witness_m={v.witness_m}"
    if v.counterexample is not None:
        line += f" counterexample={list(v.counterexample)}"
    return payload, [line], _STATUS_EXIT[v.status]


def cmd_m_char(args):
    rep = parse_rep_file(args.rep)
    word = _word(args.word) if args.word is not None else (0,)
    try:
        value = m_character(rep, word, args.m)
    except IndexError as exc:
        raise InputError(str(exc)) from None
    return {"word": list(word), "m": args.m, "value": _cyc(value)}, [str(value)], EXIT_OK


def cmd_newton(args):
    rows = [
        {"parts": list(r.parts), "degree": r.degree, "coefficient": newton_coefficient(r), "dim": dim_lambda(args.n, r)}
        for r in compositions(args.n, args.m)
    ]
    payload = {"n": args.n, "m": args.m, "terms": rows}
    lines = [f"{tuple(t['parts'])} coefficient={t['coefficient']} dim={t['dim']}" for t in rows]
    if args.rep:
        rep = parse_rep_file(args.rep)
        if rep.n != args.n:
            raise InputError(f"--n is {args.n} but the representation has dimension {rep.n}")
        word = _word(args.word) if args.word is not None else (0,)
        try:
            value = m_trace_from_charpoly(char_poly(rep.word_matrix(word)), args.m)
        except IndexError as exc:
            raise InputError(str(exc)) from None
        payload["m_trace"] = _cyc(value)
        lines.append(f"m_trace={value}")
    return payload, lines, EXIT_OK


def cmd_dm(args):
    value = d_m(args.n, args.m)
    return {"n": args.n, "m": args.m, "d_m": value}, [str(value)], EXIT_OK


def cmd_mbound(args):
    try:
        F = LocalFieldParams(args.ell, args.e, args.f)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    b = paper_m_bound(args.n, F)
    expand = args.expand or b.value < 10**EXPAND_DIGITS
    payload = {
        "n": args.n,
        "ell": F.ell,
        "e": F.e,
        "f": F.f,
        "degree_bound": b.degree_bound,
        "factors": {str(p): k for p, k in sorted(b.factors.items())},
        "cofactor": b.cofactor,
        "fully_factored": b.fully_factored,
        "factored": b.factored_str(),
        "bits": b.value.bit_length(),
        "value": b.value if expand else None,
        "roots_of_unity_bound": roots_of_unity_bound(F),
    }
    if expand:
        line = f"{b.value} (factored: {b.factored_str()})"
    else:
        line = f"{b.factored_str()} ({b.value.bit_length()} bits; --expand prints the integer)"
    return payload, [line], EXIT_OK


def cmd_weil(args):
    try:
        polys = enumerate_weil(args.q, args.w, args.d, budget=args.budget)
    except BudgetExceeded as exc:
        payload = {"error": "budget", "candidates": exc.candidates, "budget": exc.budget}
        return payload, [f"refused: {exc}"], EXIT_UNDECIDED
    if args.count_only:
        return len(polys), [str(len(polys))], EXIT_OK
    coeffs = [list(p.coeffs) for p in polys]
    return coeffs, [str(c) for c in coeffs], EXIT_OK


def _load_bundle(path):
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"E_JSON: invalid JSON: {exc}") from None
    try:
        g = data["group"]
        if "permutations" in g:
            G = fs.FiniteGroup.from_permutations(g["permutations"])
        elif "table" in g:
            G = fs.FiniteGroup.from_table(g["table"], generators=g.get("generators", ()))
        else:
            kind, _, size = g["named"].partition(":")
            maker = {"cyclic": fs.cyclic_group, "dihedral": fs.dihedral_group, "symmetric": fs.symmetric_group}
            G = maker[kind](int(size))
        modulus = data["modulus"]
        places = []
        for label, elem in data["places"]:
            places.append((label, G.index_of(elem) if isinstance(elem, list) else elem))
        P = fs.PlaceTable(places)
        reps = []
        for r in data["reps"]:
            if "matrices" in r:
                rep = fs.ModRep(G, modulus, r["matrices"])
                rep.verify()
            else:
                rep = fs.ModRep.from_generator_images(G, dict(zip(G.generators, r["images"])), modulus)
            reps.append(rep)
        if len(reps) != 2:
            raise InputError(f"bundle needs exactly two reps, got {len(reps)}")
    except (KeyError, TypeError) as exc:
        raise InputError(f"E_SCHEMA: malformed bundle ({exc!r})") from None
    return G, P, reps, data.get("T"), data.get("m")


def cmd_falsim(args):
    G, P, (r1, r2), T, m = _load_bundle(args.bundle)
    classes = fs.conjugacy_classes(G)
    if T is None:
        T = fs.frobenius_cover(G, P)
    res = fs.trace_determination_check(r1, r2, T, P)
    payload = {
        "group_order": G.order,
        "classes": classes,
        "T": list(T),
        "holds": res.holds,
        "traces_agree_on_T": res.traces_agree_on_T,
        "traces_agree_everywhere": res.traces_agree_everywhere,
        "distinguishing_place": res.distinguishing_place,
        "distinguishing_class": res.distinguishing_class,
        "span_equal": res.span_equal,
        "span_length_T": res.span_length_T,
        "span_length_all": res.span_length_all,
        "representative_span_equal": res.representative_span_equal,
    }
    if m is not None:
        payload["d_m"] = d_m(r1.n, m)
    lines = [
        f"classes={len(classes)} T={','.join(T)}",
        f"holds={res.holds} traces_agree_on_T={res.traces_agree_on_T} span_equal={res.span_equal}",
    ]
    if res.distinguishing_place is not None:
        lines.append(f"distinguished at {res.distinguishing_place} (class {res.distinguishing_class})")
    return payload, lines, EXIT_OK if res.holds else EXIT_NEGATIVE


def cmd_twist(args):
    chi = twist_equivalent_finite(parse_rep_file(args.rep1), parse_rep_file(args.rep2))
    if chi is None:
        return {"twist": None}, ["none"], EXIT_NEGATIVE
    payload = {
        "twist": {
            "modulus": chi.modulus,
            "generator_exponents": list(chi.generator_exponents),
            "exponents": list(chi.exponents),
            "trivial": chi.is_trivial,
        }
    }
    line = f"chi: generators -> zeta_{chi.modulus}^{list(chi.generator_exponents)}"
    return payload, [line], EXIT_OK


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="plain", action="store_false", help="JSON output (default)")
    g.add_argument("--plain", dest="plain", action="store_true", help="plain text output")
    fmt.set_defaults(plain=False)

    p = argparse.ArgumentParser(prog="galrep", description="Potential equivalence and related exact computations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-pe", parents=[fmt], help="decide potential equivalence of two rep files")
    s.add_argument("rep1")
    s.add_argument("rep2")
    s.add_argument("--depth", type=int, default=3)
    s.set_defaults(func=cmd_check_pe)

    s = sub.add_parser("m-char", parents=[fmt], help="Tr(rho(w)^m)")
    s.add_argument("rep")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--word", help="comma-separated letters; -(i+1) is the inverse of generator i")
    s.set_defaults(func=cmd_m_char)

    s = sub.add_parser("newton", parents=[fmt], help="Newton expansion terms for the m-th power sum")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--rep", help="also evaluate the m-trace of a word from this rep file")
    s.add_argument("--word")
    s.set_defaults(func=cmd_newton)

    s = sub.add_parser("dm", parents=[fmt], help="the rank bound d_m")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_dm)

    s = sub.add_parser("mbound", parents=[fmt], help="power bound for an l-adic coefficient field")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--e", type=int, default=1)
    s.add_argument("--f", type=int, default=1)
    s.add_argument("--expand", action="store_true", help="always print the integer itself")
    s.set_defaults(func=cmd_mbound)

    s = sub.add_parser("weil", parents=[fmt], help="enumerate Weil polynomials")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--w", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--budget", type=int, help="candidate budget (default: $GALREP_BUDGET or 10^7)")
    s.set_defaults(func=cmd_weil)

    s = sub.add_parser("falsim", parents=[fmt], help="test-set simulation on a finite group bundle")
    s.add_argument("bundle")
    s.set_defaults(func=cmd_falsim)

    s = sub.add_parser("twist", parents=[fmt], help="find a linear character relating two finite reps")
    s.add_argument("rep1")
    s.add_argument("rep2")
    s.set_defaults(func=cmd_twist)
    return p


def _positive(args):
    for name in ("n", "m", "d", "q", "depth", "budget"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise InputError(f"--{name} must be positive, got {v}")


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        _positive(args)
        payload, lines, code = args.func(args)
    except RepFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ClosureTooLarge, fs.CoverError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.plain:
        sys.stdout.write("".join(line + "\n" for line in lines))
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
