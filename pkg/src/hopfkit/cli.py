"""Command-line interface: verify, derive, check, search, report.

    hopfkit verify  <file> [--field rational|p] [--threads N]
    hopfkit derive  <what> <file> [--name N] [--using M] [--out path]
    hopfkit check   <condition> <file> [--name N]
    hopfkit search  rb-group <file> [--budget N]
    hopfkit report  <file> [--format json|text] [--out path]

Exit codes: 0 all checks pass, 1 a check failed (the report says which),
2 input error.  Reports are deterministic: byte-identical across runs and
thread counts for the same input (the --threads flag is accepted for
interface compatibility; sweeps are pure and schedule-independent).
"""

from __future__ import annotations

import argparse
import sys

from . import brace as brace_mod
from . import cocycle as cocycle_mod
from . import constructions as constr_mod
from . import groups as gr
from . import matched as matched_mod
from . import posthopf as posthopf_mod
from . import rb as rb_mod
from .definitions import Declaration, DefinitionFile, parse_file
from .errors import (DefinitionError, DefinitionSyntaxError, DimensionMismatch,
                     FieldMismatch, HopfkitError, VerificationFailed)
from .hopf import verify_hopf, check_cocommutative, unit_counit_map
from .linalg import Field, LinearOp
from .rb import (RotaBaxterOp, central_image_witness,
                 descendent_antipode_inverse_witness, verify_rb)
from .serialize import (digest, document, dump_document, field_to_json,
                        hopf_to_decl, map_entries, map_to_decl)

CHECK_CONDITIONS = ("op-module", "symmetric", "prop44", "prop48", "prop49",
                    "central-image", "lemma218")
DERIVE_TARGETS = ("circle", "tilde", "conjugate", "posthopf", "matched-pair",
                  "ybe", "embed", "smash", "cocycle-rb")


# -- building constructions from declarations -------------------------------------

def _ensure_validated(h):
    if not h.validated:
        report = verify_hopf(h)
        if not report.passed:
            fail = report.first_failure()
            raise VerificationFailed(f"Hopf axioms fail: {fail.name}",
                                     fail.witness)
    return h


def build_rb(defs: DefinitionFile, decl: Declaration) -> RotaBaxterOp:
    h = _ensure_validated(decl.refs["hopf"].obj)
    return verify_rb(h, decl.refs["map"].obj)


def rb_from_map_decl(defs: DefinitionFile, decl: Declaration) -> RotaBaxterOp:
    h = _ensure_validated(defs[decl.on].obj)
    return verify_rb(h, decl.obj)


def build_brace(defs: DefinitionFile, decl: Declaration):
    if "rb" in decl.refs:
        return brace_mod.brace_from_rb(build_rb(defs, decl.refs["rb"]))
    if "flip" in decl.refs:
        return brace_mod.flip_brace(_ensure_validated(decl.refs["flip"].obj))
    dot = _ensure_validated(decl.refs["dot"].obj)
    circle = _ensure_validated(decl.refs["circle"].obj)
    return brace_mod.verify_brace(dot, circle)


def build_smash(defs: DefinitionFile, decl: Declaration):
    left = _ensure_validated(decl.refs["left"].obj)
    right = _ensure_validated(decl.refs["right"].obj)
    return constr_mod.smash_product(left, right, decl.refs["action"].obj)


def build_factorization(defs: DefinitionFile, decl: Declaration):
    g = _ensure_validated(decl.refs["ambient"].obj)
    return constr_mod.triple_factorization(g, decl.raw["h"], decl.raw["l"],
                                           decl.raw["m"])


def middle_rb_map(sub_l, spec):
    if spec == "inversion":
        return sub_l.antipode
    if spec == "unit-counit":
        return unit_counit_map(sub_l)
    if isinstance(spec, dict) and "images" in spec:
        cols = [sub_l.space.basis(sub_l.space.index_of(spec["images"][lab]))
                for lab in sub_l.space.labels]
        return LinearOp(sub_l.space, sub_l.space, cols)
    raise DefinitionSyntaxError(f"unrecognized middle_rb spec {spec!r}")


def build_cocycle(defs: DefinitionFile, decl: Declaration):
    src = _ensure_validated(decl.refs["source"].obj)
    tgt = _ensure_validated(decl.refs["target"].obj)
    return cocycle_mod.verify_cocycle(src, tgt, decl.refs["action"].obj,
                                      decl.refs["map"].obj)


# -- the verification report -------------------------------------------------------

def run_checks(defs: DefinitionFile) -> tuple[list[dict], dict]:
    """One entry per check, in declaration order, plus structure digests."""
    checks: list[dict] = []
    digests: dict[str, str] = {}

    def add(name: str, witness, passed=None):
        entry = {"name": name, "passed": witness is None if passed is None
                 else passed}
        if witness is not None:
            entry["witness"] = witness.as_dict() if hasattr(witness, "as_dict") \
                else {"at": [], "lhs": str(witness), "rhs": ""}
        checks.append(entry)

    def add_outcome(name: str, fn):
        try:
            fn()
            add(name, None)
        except VerificationFailed as exc:
            add(name, exc.witness, passed=False)
        except HopfkitError as exc:
            add(name, exc, passed=False)

    for decl in defs.declarations:
        if decl.kind == "group":
            add(f"{decl.name}.group-axioms", None)
            digests[decl.name] = digest({"table": [list(r) for r in decl.obj.table],
                                         "labels": list(decl.obj.labels)})
        elif decl.kind == "hopf":
            report = verify_hopf(decl.obj)
            for c in report.checks:
                add(f"{decl.name}.{c.name}", c.witness, passed=c.passed)
            if report.passed:
                add(f"{decl.name}.cocommutative", None,
                    passed=check_cocommutative(decl.obj))
            else:
                add(f"{decl.name}.cocommutative", None, passed=False)
            digests[decl.name] = digest(hopf_to_decl(decl.name, decl.obj))
        elif decl.kind == "map":
            if decl.on is not None:
                carrier = defs[decl.on].obj
                w = rb_mod._coalgebra_map_witness(carrier, decl.obj)
                add(f"{decl.name}.coalgebra-morphism", w)
                if decl.rota_baxter:
                    add_outcome(f"{decl.name}.rota-baxter",
                                lambda d=decl: rb_from_map_decl(defs, d))
            digests[decl.name] = digest(map_entries(decl.obj))
        elif decl.kind == "action":
            from .hopf import check_module_bialgebra
            rep = check_module_bialgebra(decl.obj)
            fail = rep.first_failure()
            add(f"{decl.name}.module-bialgebra",
                fail.witness if fail else None, passed=rep.passed)
            digests[decl.name] = digest(map_entries(decl.obj.act))
        elif decl.kind == "rb":
            add_outcome(f"{decl.name}.rota-baxter",
                        lambda d=decl: build_rb(defs, d))
        elif decl.kind == "brace":
            add_outcome(f"{decl.name}.brace",
                        lambda d=decl: build_brace(defs, d))
        elif decl.kind == "smash":
            add_outcome(f"{decl.name}.smash",
                        lambda d=decl: build_smash(defs, d))
        elif decl.kind == "factorization":
            def run_fact(d=decl):
                fact = build_factorization(defs, d)
                if "middle_rb" in d.raw:
                    c = verify_rb(fact.sub_l,
                                  middle_rb_map(fact.sub_l, d.raw["middle_rb"]))
                    constr_mod.rb_from_triple_factorization(fact, c)
            add_outcome(f"{decl.name}.factorization", run_fact)
        elif decl.kind == "cocycle":
            add_outcome(f"{decl.name}.cocycle",
                        lambda d=decl: build_cocycle(defs, d))
    return checks, digests


def build_report(defs: DefinitionFile, command: str) -> dict:
    checks, digests = run_checks(defs)
    return {"version": 1, "field": field_to_json(defs.field),
            "command": command, "checks": checks, "digests": digests,
            "passed": all(c["passed"] for c in checks)}


def render_report_text(report: dict) -> str:
    lines = [f"field: {report['field']}"]
    for c in report["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        line = f"{mark}  {c['name']}"
        if "witness" in c:
            w = c["witness"]
            line += f"  [at ({', '.join(w['at'])}): lhs = {w['lhs']}, " \
                    f"rhs = {w['rhs']}]"
        lines.append(line)
    for name in sorted(report["digests"]):
        lines.append(f"digest  {name}  {report['digests'][name]}")
    lines.append(f"result: {'PASS' if report['passed'] else 'FAIL'} "
                 f"({len(report['checks'])} checks)")
    return "\n".join(lines) + "\n"


def render_report_json(report: dict) -> str:
    import json
    return json.dumps(report, sort_keys=True, indent=2,
                      ensure_ascii=False) + "\n"


# -- derive -------------------------------------------------------------------------

def resolve_rb(defs: DefinitionFile, name: str | None) -> tuple[str, RotaBaxterOp]:
    if name is not None:
        decl = defs[name]
        if decl.kind == "rb":
            return name, build_rb(defs, decl)
        if decl.kind == "map" and decl.on is not None:
            return name, rb_from_map_decl(defs, decl)
        raise DefinitionError(f"'{name}' is not a Rota-Baxter declaration")
    decl = defs.first("rb")
    if decl is not None:
        return decl.name, build_rb(defs, decl)
    for decl in defs.declarations:
        if decl.kind == "map" and decl.rota_baxter:
            return decl.name, rb_from_map_decl(defs, decl)
    raise DefinitionError("no Rota-Baxter declaration found "
                          "(declare kind 'rb' or flag a map rota_baxter)")


def resolve_brace(defs: DefinitionFile, name: str | None):
    if name is not None:
        decl = defs[name]
        if decl.kind == "brace":
            return name, build_brace(defs, decl)
        _, rbop = resolve_rb(defs, name)
        return name, brace_mod.brace_from_rb(rbop)
    decl = defs.first("brace")
    if decl is not None:
        return decl.name, build_brace(defs, decl)
    src, rbop = resolve_rb(defs, None)
    return src, brace_mod.brace_from_rb(rbop)


def run_derive(defs: DefinitionFile, what: str, name: str | None,
               using: str | None) -> dict:
    decls: list[dict] = []
    if what == "circle":
        src, rbop = resolve_rb(defs, name)
        d = rb_mod.descend(rbop)
        decls.append(hopf_to_decl(f"{src}_circle", d.hopf))
    elif what == "tilde":
        src, rbop = resolve_rb(defs, name)
        tilde = rb_mod.rb_tilde(rbop)
        carrier = f"{src}_carrier"
        decls.append(hopf_to_decl(carrier, rbop.carrier))
        entry = map_to_decl(f"{src}_tilde", tilde.map, on=carrier)
        entry["rota_baxter"] = True
        decls.append(entry)
    elif what == "conjugate":
        if using is None:
            raise DefinitionError("derive conjugate needs --using <automorphism>")
        src, rbop = resolve_rb(defs, name)
        phi = defs[using]
        if phi.kind != "map":
            raise DefinitionError(f"--using '{using}' must name a map")
        conj = rb_mod.rb_conjugate(rbop, phi.obj)
        carrier = f"{src}_carrier"
        decls.append(hopf_to_decl(carrier, rbop.carrier))
        entry = map_to_decl(f"{src}_conjugate", conj.map, on=carrier)
        entry["rota_baxter"] = True
        decls.append(entry)
    elif what == "posthopf":
        src, rbop = resolve_rb(defs, name)
        p = posthopf_mod.posthopf_from_rb(rbop)
        decls.append(hopf_to_decl(f"{src}_carrier", p.carrier))
        decls.append(map_to_decl(f"{src}_tri", p.tri))
        decls.append(map_to_decl(f"{src}_beta", p.beta))
    elif what == "matched-pair":
        src, rbop = resolve_rb(defs, name)
        m = matched_mod.matched_pair_from_rb(rbop)
        decls.append(hopf_to_decl(f"{src}_circle", m.left))
        decls.append(map_to_decl(f"{src}_lact", m.lact))
        decls.append(map_to_decl(f"{src}_ract", m.ract))
    elif what == "ybe":
        src, rbop = resolve_rb(defs, name)
        y = matched_mod.ybe_from_rb(rbop)
        decls.append(map_to_decl(f"{src}_ybe_c", y.c))
        decls.append(map_to_decl(f"{src}_ybe_c_inverse", y.c_inverse))
    elif what == "embed":
        src, br = resolve_brace(defs, name)
        emb = brace_mod.embed_into_rb(br)
        ambient = f"{src}_ambient"
        decls.append(hopf_to_decl(ambient, emb.ambient))
        entry = map_to_decl(f"{src}_rb", emb.rb.map, on=ambient)
        entry["rota_baxter"] = True
        decls.append(entry)
        decls.append(map_to_decl(f"{src}_psi", emb.psi))
    elif what == "smash":
        decl = defs[name] if name is not None else defs.first("smash")
        if decl is None or decl.kind != "smash":
            raise DefinitionError("no smash declaration found")
        sp = build_smash(defs, decl)
        decls.append(hopf_to_decl(f"{decl.name}_smash", sp.product))
        decls.append(hopf_to_decl(f"{decl.name}_tensor", sp.tensor))
    elif what == "cocycle-rb":
        decl = defs[name] if name is not None else defs.first("cocycle")
        if decl is None or decl.kind != "cocycle":
            raise DefinitionError("no cocycle declaration found")
        coc = build_cocycle(defs, decl)
        built = cocycle_mod.rb_hopf_from_cocycle(coc)
        ambient = f"{decl.name}_ambient"
        decls.append(hopf_to_decl(ambient, built.ambient))
        entry = map_to_decl(f"{decl.name}_rb", built.rb.map, on=ambient)
        entry["rota_baxter"] = True
        decls.append(entry)
    else:
        raise DefinitionError(f"unknown derive target '{what}'")
    return document(defs.field, decls)


# -- check ---------------------------------------------------------------------------

def resolve_hopf_and_map(defs: DefinitionFile, name: str | None):
    if name is not None:
        decl = defs[name]
        if decl.kind == "rb":
            h = _ensure_validated(decl.refs["hopf"].obj)
            return h, decl.refs["map"].obj
        if decl.kind == "map" and decl.on is not None:
            return _ensure_validated(defs[decl.on].obj), decl.obj
        raise DefinitionError(f"'{name}' does not name a (hopf, map) pair")
    decl = defs.first("rb")
    if decl is not None:
        return _ensure_validated(decl.refs["hopf"].obj), decl.refs["map"].obj
    for decl in defs.declarations:
        if decl.kind == "map" and decl.on is not None:
            return _ensure_validated(defs[decl.on].obj), decl.obj
    raise DefinitionError("no map declaration found")


def run_check(defs: DefinitionFile, condition: str, name: str | None):
    if condition in ("op-module", "symmetric", "prop44"):
        _, br = resolve_brace(defs, name)
        fn = {"op-module": brace_mod.op_module_witness,
              "symmetric": brace_mod.symmetric_witness,
              "prop44": brace_mod.symmetric_sufficient_witness}[condition]
        return fn(br)
    h, b = resolve_hopf_and_map(defs, name)
    fn = {"prop48": brace_mod.rb_symmetric_sufficient_witness,
          "prop49": brace_mod.rb_op_module_witness,
          "central-image": central_image_witness,
          "lemma218": descendent_antipode_inverse_witness}[condition]
    return fn(h, b)


# -- search ----------------------------------------------------------------------------

def run_search(defs: DefinitionFile, budget: int | None) -> dict:
    out: dict = {}
    for decl in defs.declarations:
        group = decl.obj if decl.kind == "group" else decl.group
        if group is None:
            continue
        ops = gr.enumerate_rb_group_ops(group, budget)
        out[decl.name] = {"order": group.order,
                          "operators": [list(op.table) for op in ops],
                          "count": len(ops)}
    if not out:
        raise DefinitionError("no group declarations found")
    return out


# -- entry point -------------------------------------------------------------------------

def _write(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hopfkit",
        description="Exact verification engine for Rota-Baxter operators on "
                    "cocommutative Hopf algebras, Hopf braces and "
                    "Yang-Baxter maps.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None,
                        help="override the document field: 'rational' or a prime p")
    common.add_argument("--threads", type=int, default=0,
                        help="accepted for interface compatibility; sweeps are "
                             "sequential and schedule-independent")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", default=None, help="write output to a file")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify", parents=[common],
                       help="run the full axiom suite on every declaration")
    p.add_argument("file")
    p = sub.add_parser("derive", parents=[common],
                       help="emit a derived structure as a definition file")
    p.add_argument("what", choices=DERIVE_TARGETS)
    p.add_argument("file")
    p.add_argument("--name", default=None, help="source declaration")
    p.add_argument("--using", default=None,
                   help="auxiliary map (automorphism for 'conjugate')")
    p = sub.add_parser("check", parents=[common],
                       help="sweep one named condition")
    p.add_argument("condition", choices=CHECK_CONDITIONS)
    p.add_argument("file")
    p.add_argument("--name", default=None, help="structure to check")
    p = sub.add_parser("search", parents=[common],
                       help="enumerate Rota-Baxter operators on declared groups")
    p.add_argument("what", choices=("rb-group",))
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None,
                   help="bound on search nodes")
    p = sub.add_parser("report", parents=[common],
                       help="full verification report with structure digests")
    p.add_argument("file")

    args = parser.parse_args(argv)
    field_override = None
    if args.field is not None:
        field_override = Field(0) if args.field == "rational" \
            else Field(int(args.field))

    try:
        defs = parse_file(args.file, field_override)
    except (DefinitionError, DimensionMismatch, FieldMismatch, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "verify":
            report = build_report(defs, "verify")
            text = render_report_json(report) if args.format == "json" \
                else render_report_text(report)
            _write(text, args.out)
            return 0 if report["passed"] else 1
        if args.command == "report":
            report = build_report(defs, "report")
            text = render_report_json(report) if args.format == "json" \
                else render_report_text(report)
            _write(text, args.out)
            return 0 if report["passed"] else 1
        if args.command == "derive":
            doc = run_derive(defs, args.what, args.name, args.using)
            _write(dump_document(doc), args.out)
            return 0
        if args.command == "check":
            witness = run_check(defs, args.condition, args.name)
            if witness is None:
                _write(f"PASS  {args.condition}\n", args.out)
                return 0
            _write(f"FAIL  {args.condition}  [{witness}]\n", args.out)
            return 1
        if args.command == "search":
            found = run_search(defs, args.budget)
            if args.format == "json":
                import json
                _write(json.dumps(found, sort_keys=True, indent=2) + "\n",
                       args.out)
            else:
                lines = []
                for name in sorted(found):
                    info = found[name]
                    lines.append(f"group {name}: {info['count']} operators")
                    for table in info["operators"]:
                        lines.append("  " + " ".join(str(x) for x in table))
                _write("\n".join(lines) + "\n", args.out)
            return 0
    except DefinitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        print(f"FAIL  {exc}", file=sys.stderr)
        return 1
    except HopfkitError as exc:
        print(f"FAIL  {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
