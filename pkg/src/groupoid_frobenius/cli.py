"""Command-line front end.

Reads a group or groupoid description as JSON (file or stdin), runs one
computation and prints a JSON document with exact rationals written as
``"num/den"``.  Exit status: 0 success, 1 input error, 2 a checked identity
failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from .characters import (ag_groupoid, class_frobenius_algebra, euler_data, gram_matrix,
                         mackey_residual, morava_character_model, tg_form_check, transfer_R)
from .formal import bc_frobenius_form, expected_form_pattern, transfer_element_check
from .frobenius import (alpha_element, full_report, trace_form)
from .groupoid import (Groupoid, GroupoidFunctor, SizeCap, SizeGuard, connected_split,
                       group_groupoid, pi0, validate_groupoid, cardinality)
from .groups import FiniteGroup, NotAGroup
from .homotopy import (classify_functor, homotopy_pullback, is_homotopy_cartesian, loop_groupoid,
                       p_loop_groupoid, square_from_homotopy_pullback, square_from_pullback,
                       strict_pullback)
from .scalars import ModP, format_rational


class InputError(ValueError):
    pass


# ---------------------------------------------------------------- input

def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict) or "type" not in doc:
        raise InputError("line 1, column 1: expected an object with a \"type\" field")
    return doc


def _int_table(rows, what: str) -> list[list[int]]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{what} must be a list of lists of integers")
    try:
        return [[int(x) for x in r] for r in rows]
    except (TypeError, ValueError):
        raise InputError(f"{what} must contain only integers") from None



def load_input(doc: dict) -> tuple[Groupoid, FiniteGroup | None, str]:
    """The groupoid described by ``doc``, the group when there is one, and the input kind."""
    kind = doc["type"]
    try:
        if kind == "group-cayley":
            group = FiniteGroup(_int_table(doc.get("table"), "table"), name=doc.get("name", "G"))
            return group_groupoid(group), group, kind
        if kind == "group-perms":
            gens = _int_table(doc.get("generators"), "generators")
            group = FiniteGroup.from_permutations(gens, one_based=True, name=doc.get("name", "G"))
            return group_groupoid(group), group, kind
        if kind == "groupoid":
            return _load_groupoid(doc), None, kind
    except NotAGroup as e:
        raise InputError(f"not a group: {e}") from None
    raise InputError(f"unknown input type {kind!r}")


def _load_groupoid(doc: dict) -> Groupoid:
    try:
        n = int(doc["objects"])
        mors = doc["morphisms"]
        src = [int(m["src"] if isinstance(m, dict) else m[0]) for m in mors]
        dst = [int(m["dst"] if isinstance(m, dict) else m[1]) for m in mors]
        table = {(int(f), int(g)): int(h) for f, g, h in doc["compose"]}
        ident = [int(x) for x in doc["identities"]]
        inv = [int(x) for x in doc["inverses"]]
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise InputError(f"malformed groupoid document: {e}") from None
    g = Groupoid(n, src, dst, ident, inv, table, name=doc.get("name", "G"))
    problems = validate_groupoid(g)
    if problems:
        raise InputError("invalid groupoid: " + "; ".join(problems))
    return g


def _subgroup(group: FiniteGroup, kind: str, text: str) -> list[int]:
    try:
        gens = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"subgroup: line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(gens, list):
        raise InputError("subgroup must be a JSON list of generators")
    idx = []
    for g in gens:
        if kind == "group-perms":
            label = tuple(int(x) - 1 for x in g)
            label = label + tuple(range(len(label), len(group.labels[0])))
            if label not in group.labels:
                raise InputError(f"subgroup generator {g} is not in the group")
            idx.append(group.labels.index(label))
        else:
            if not isinstance(g, int) or not 0 <= g < len(group):
                raise InputError(f"subgroup generator {g} is not an element index")
            idx.append(g)
    return sorted(group.closure(idx))


# ---------------------------------------------------------------- output

def encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (Fraction, ModP)):
        return format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(encode(v) for v in value)
    return str(value)


def _rationals(values) -> list[str]:
    return [format_rational(Fraction(v)) if not isinstance(v, ModP) else format_rational(v)
            for v in values]


def _class_summary(g: Groupoid) -> dict:
    t = pi0(g)
    return {"objects": g.object_count, "morphisms": g.morphism_count,
            "classes": t.class_count, "aut_orders": list(t.aut_order),
            "cardinality": format_rational(cardinality(g))}


# ---------------------------------------------------------------- commands

class Failure(Exception):
    def __init__(self, doc: dict, identity: str):
        super().__init__(identity)
        self.doc = doc
        self.identity = identity


def cmd_info(g: Groupoid, group, kind, args, cap) -> dict:
    out = _class_summary(g)
    out["validation"] = "ok"
    out["components"] = [{"size": p.size, "vertex_group_order": len(p.vertex_group)}
                         for p in connected_split(g)]
    return out


def _primes_of(g: Groupoid) -> list[int]:
    order = 1
    for a in pi0(g).aut_order:
        order *= a
    primes = []
    k, d = order, 2
    while k > 1:
        if k % d == 0:
            primes.append(d)
            while k % d == 0:
                k //= d
        d += 1
    return primes


def cmd_loops(g: Groupoid, group, kind, args, cap) -> dict:
    lg, pi = loop_groupoid(g)
    primes = [args.p] if args.p else _primes_of(g)
    out = {"loop": _class_summary(lg), "projection_is_covering": classify_functor(pi).covering}
    out["p_loops"] = {str(p): _class_summary(p_loop_groupoid(g, p)) for p in primes}
    return out


def cmd_chartable(g: Groupoid, group, kind, args, cap) -> dict:
    model = morava_character_model(g, args.p, args.n, cap)
    a = model.algebra
    labels = [list(model.tuples.object_labels[r][1]) for r in model.classes.representative]
    out = {
        "p": args.p, "n": args.n, "rank": a.dim,
        "classes": labels,
        "eps": _rationals(a.eps),
        "theta": _rationals(trace_form(a)),
        "alpha": _rationals(alpha_element(a)),
        "alpha_prime": _rationals(model.alpha_prime.values),
        "gram": [_rationals(r) for r in gram_matrix(model.tuples)],
    }
    problems = full_report(a) + tg_form_check(model)
    out["checks"] = "ok" if not problems else problems
    if problems:
        raise Failure(out, problems[0])
    return out


def cmd_mackey(g: Groupoid, group, kind, args, cap) -> dict:
    if group is None:
        raise InputError("mackey needs a group input")
    from .groupoid import subgroup_inclusion
    _, u = subgroup_inclusion(group, _subgroup(group, kind, args.sub1), "G1")
    _, v = subgroup_inclusion(group, _subgroup(group, kind, args.sub2), "G2")
    # both inclusions must land in the same target groupoid
    target = u.target
    v = GroupoidFunctor(v.source, target, v.object_map, v.morphism_map)
    hp = homotopy_pullback(u, v, cap)
    residual = mackey_residual(square_from_homotopy_pullback(hp, u, v), cap)
    strict = strict_pullback(u, v, cap)
    out = {
        "sub1_order": u.source.morphism_count,
        "sub2_order": v.source.morphism_count,
        "pullback": {"objects": hp.groupoid.object_count, "aut_orders": list(pi0(hp.groupoid).aut_order)},
        "strict_pullback_order": strict.groupoid.morphism_count,
        "strict_square_cartesian": is_homotopy_cartesian(square_from_pullback(strict, u, v), cap).cartesian,
        "transfer_sub1": [_rationals(r) for r in transfer_R(u)],
    }
    zero = all(x == 0 for row in residual for x in row)
    out["residual"] = "0" if zero else [_rationals(r) for r in residual]
    if not zero:
        raise Failure(out, "Mackey formula: residual is nonzero")
    return out


def cmd_euler(g: Groupoid, group, kind, args, cap) -> dict:
    data = euler_data(g, args.p, args.n, cap)
    out = {"p": args.p, "n": args.n, "chi": format_rational(data.chi),
           "recursion_value": format_rational(data.recursion_value),
           "recursion_ok": data.recursion_ok}
    if not data.recursion_ok:
        raise Failure(out, "Euler recursion: chi_n(G) != chi_(n-1)([Z_p, G])")
    return out


def cmd_ag(g: Groupoid, group, kind, args, cap) -> dict:
    ag, alpha = ag_groupoid(g, args.p, cap)
    t = pi0(ag)
    classes = []
    for c, r in enumerate(t.representative):
        a, sub = ag.object_labels[r]
        classes.append({"object": a, "subgroup_order": len(sub), "aut_order": t.aut_order[c],
                        "alpha_prime": format_rational(alpha.values[c])})
    return {"p": args.p, "classes": classes}


def cmd_frobform(g, group, kind, args, cap) -> dict:
    eps = bc_frobenius_form(args.p, args.n, args.m)
    pattern = expected_form_pattern(args.p, args.n, args.m)
    report = transfer_element_check(args.p, args.n, args.m)
    out = {"p": args.p, "n": args.n, "m": args.m, "size": len(eps),
           "eps": [int(e) for e in eps],
           "ones_at": [k for k, e in enumerate(eps) if e],
           "pattern_matches": tuple(int(e) for e in eps) == pattern,
           "transfer_check": "ok" if report.ok else "failed",
           "transfer_applied": list(report.epsilon_applied)}
    if not out["pattern_matches"]:
        raise Failure(out, "residue form does not match the predicted pattern")
    if not report.ok:
        raise Failure(out, "transfer element: (eps⊗1)(c) != 1")
    return out


def cmd_verify(g: Groupoid, group, kind, args, cap) -> dict:
    checks: dict[str, str] = {}

    def record(name: str, problems: list[str]):
        checks[name] = "ok" if not problems else problems[0]

    record("groupoid axioms", validate_groupoid(g))
    lg, pi = loop_groupoid(g)
    record("loop projection is a covering", [] if classify_functor(pi).covering else ["not a covering"])
    record("class algebra", full_report(class_frobenius_algebra(g)))
    for p in _primes_of(g):
        for n in (1, 2):
            try:
                model = morava_character_model(g, p, n, cap)
            except SizeGuard as e:
                checks[f"character model p={p} n={n}"] = f"skipped: {e}"
                continue
            record(f"character model p={p} n={n}", full_report(model.algebra) + tg_form_check(model))
            data = euler_data(g, p, n, cap)
            record(f"euler recursion p={p} n={n}", [] if data.recursion_ok else ["mismatch"])
    out = {"checks": checks}
    failed = [k for k, v in checks.items() if v != "ok" and not v.startswith("skipped")]
    if failed:
        raise Failure(out, f"{failed[0]}: {checks[failed[0]]}")
    return out


COMMANDS = {
    "info": cmd_info, "loops": cmd_loops, "chartable": cmd_chartable, "mackey": cmd_mackey,
    "euler": cmd_euler, "ag": cmd_ag, "frobform": cmd_frobform, "verify": cmd_verify,
}

NEEDS_INPUT = set(COMMANDS) - {"frobform"}


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); exit 2 is reserved for failed identities
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="groupoid-frobenius",
                                     description="Exact groupoid, character and formal-group computations.")
    parser.add_argument("--cap", type=int, default=None,
                        help="object cap for constructions (morphism cap is 10x)")
    parser.add_argument("--seed", type=int, default=None,
                        help="accepted for compatibility; every computation is deterministic")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        if name in NEEDS_INPUT:
            sp.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
        if name in ("chartable", "euler"):
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--n", type=int, required=True)
        if name in ("loops", "ag"):
            sp.add_argument("--p", type=int, required=(name == "ag"))
        if name == "mackey":
            sp.add_argument("--sub1", required=True, help="JSON list of generators")
            sp.add_argument("--sub2", required=True, help="JSON list of generators")
        if name == "frobform":
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--m", type=int, required=True)
    return parser


def _dump(doc: dict) -> str:
    return json.dumps(encode(doc), sort_keys=True, indent=2, ensure_ascii=False)


def run(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.seed is not None:
        print("note: --seed is ignored; all computations are deterministic", file=stderr)
    cap = SizeCap(args.cap, args.cap * 10) if args.cap else None
    try:
        if args.command in NEEDS_INPUT:
            if args.input == "-":
                text = stdin.read()
            else:
                try:
                    with open(args.input, encoding="utf-8") as fh:
                        text = fh.read()
                except OSError as e:
                    raise InputError(f"cannot read {args.input}: {e.strerror}") from None
            g, group, kind = load_input(parse_document(text))
        else:
            g, group, kind = None, None, None
        body = COMMANDS[args.command](g, group, kind, args, cap)
    except InputError as e:
        print(f"input error: {e}", file=stderr)
        return 1
    except SizeGuard as e:
        print(f"size guard: {e}", file=stderr)
        return 1
    except Failure as f:
        stdout.write(_dump({"command": args.command, "failed": f.identity, args.command: f.doc}) + "\n")
        print(f"verification failed: {f.identity}", file=stderr)
        return 2
    stdout.write(_dump({"command": args.command, args.command: body}) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
