"""Command-line front end and the .hbx document format.

Exit codes: 0 all checks pass, 1 a verified mathematical failure, 2 usage or IO error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .algebra import AlgebraError, StructAlgebra, characters, radical, simple_modules
from .catalog import SUITES, CatalogError, catalog_get, catalog_names
from .cleft import CleftDatum, CleftError, crossed_product, datum_validate, normalize_taft_datum
from .cyclo import FieldSpec
from .exactla import Mat
from .hopf import (
    HopfError,
    HopfMorphism,
    antipode_property_problems,
    check_exact_sequence,
    coradical_filtration,
    dual,
    filtration_problems,
    fingerprint,
    iso_search,
    make_hopf,
    tensor_product,
)
from .present import CompletionError, PresentationError, complete_rewriting, parse_presentation

HBX_VERSION = 1


class UsageError(Exception):
    pass


class Failure(Exception):
    """A verified mathematical failure (exit code 1)."""


# -- documents --------------------------------------------------------------------


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


@dataclass
class HBXDocument:
    field: FieldSpec
    dim: int
    labels: list
    unit: list
    mult: list  # [i, j, k, scalar]
    comult: list  # [k, i, j, scalar]
    counit: list
    antipode: list = None  # [i, j, scalar] entries of the matrix
    note: str = ""

    @classmethod
    def from_hopf(cls, H, note=""):
        A = H.alg
        mult = [[i, j, k, v] for i in range(A.dim) for j in range(A.dim) for k, v in sorted(A.mult[i][j].items())]
        comult = [[k, i, j, v] for k in range(H.dim) for (i, j), v in sorted(H.comult[k].items())]
        S = [[i, j, H.antipode[i, j]] for i in range(H.dim) for j in range(H.dim) if H.antipode[i, j]]
        return cls(H.field, H.dim, list(H.labels), list(A.unit), mult, comult, list(H.counit), S, note)

    def to_json(self):
        t = lambda a: a.to_text()  # noqa: E731
        doc = {
            "format": "hbx",
            "version": HBX_VERSION,
            "field": {"conductor": self.field.conductor},
            "dim": self.dim,
            "labels": list(self.labels),
            "unit": [t(a) for a in self.unit],
            "mult": [[i, j, k, t(v)] for i, j, k, v in self.mult],
            "comult": [[k, i, j, t(v)] for k, i, j, v in self.comult],
            "counit": [t(a) for a in self.counit],
        }
        if self.antipode is not None:
            doc["antipode"] = [[i, j, t(v)] for i, j, v in self.antipode]
        if self.note:
            doc["note"] = self.note
        return doc

    def dumps(self):
        return dumps(self.to_json())

    @classmethod
    def from_json(cls, doc):
        try:
            if doc.get("format") != "hbx" or doc.get("version") != HBX_VERSION:
                raise UsageError("not an hbx document of a supported version")
            F = FieldSpec(int(doc["field"]["conductor"]))
            d = int(doc["dim"])
            s = F.from_text

            def idx(*ks):
                for k in ks:
                    if not (isinstance(k, int) and 0 <= k < d):
                        raise UsageError(f"index {k!r} out of range for dimension {d}")
                return ks

            mult = [[*idx(i, j, k), s(v)] for i, j, k, v in doc["mult"]]
            comult = [[*idx(k, i, j), s(v)] for k, i, j, v in doc["comult"]]
            S = doc.get("antipode")
            S = None if S is None else [[*idx(i, j), s(v)] for i, j, v in S]
            labels = list(doc["labels"])
            unit = [s(a) for a in doc["unit"]]
            counit = [s(a) for a in doc["counit"]]
            if len(labels) != d or len(unit) != d or len(counit) != d:
                raise UsageError("labels, unit and counit must have length dim")
            return cls(F, d, labels, unit, mult, comult, counit, S, doc.get("note", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed hbx document: {exc}") from None

    @classmethod
    def loads(cls, text):
        try:
            return cls.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON: {exc}") from None

    def algebra(self):
        entries = [(i, j, k, v) for i, j, k, v in self.mult]
        return StructAlgebra.from_entries(self.field, self.dim, entries, tuple(self.unit), tuple(self.labels))

    def to_hopf(self, name=""):
        """Fully verified Hopf algebra; raises HopfError with a witness."""
        comult = [{} for _ in range(self.dim)]
        for k, i, j, v in self.comult:
            comult[k][(i, j)] = comult[k].get((i, j), self.field.zero()) + v
        S = None
        if self.antipode is not None:
            rows = [[self.field.zero()] * self.dim for _ in range(self.dim)]
            for i, j, v in self.antipode:
                rows[i][j] = v
            S = Mat.from_rows(rows, self.dim)
        return make_hopf(self.algebra(), comult, self.counit, S, name)


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def env_field():
    env = os.environ.get("HOPFKIT_FIELD")
    if not env:
        return None
    try:
        return FieldSpec(int(env))
    except ValueError:
        raise UsageError(f"bad HOPFKIT_FIELD {env!r}") from None


def load_doc(path):
    doc = HBXDocument.loads(_read(path))
    F = env_field()
    if F is not None and F.conductor != doc.field.conductor:
        raise UsageError(
            f"{path} is over Q(zeta_{doc.field.conductor}) but HOPFKIT_FIELD={F.conductor}"
        )
    return doc


def load_hopf(path):
    doc = load_doc(path)
    name = os.path.splitext(os.path.basename(path))[0]
    return doc.to_hopf(name)


def _same_field(*hs):
    if len({H.field.conductor for H in hs}) > 1:
        raise UsageError("inputs are over different fields")


def _emit(doc):
    sys.stdout.write(dumps(doc))


def _mat_json(M):
    return [[a.to_text() for a in row] for row in M.rows]


def load_morphism(path, objects):
    """Morphism JSON {source, target, matrix}; source and target are input paths or A, H, B."""
    try:
        doc = json.loads(_read(path))
        src, tgt = objects[doc["source"]], objects[doc["target"]]
        M = Mat.from_text(doc["matrix"], src.field)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {path}: {exc}") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed morphism {path}: {exc}") from None
    if M.shape != (tgt.dim, src.dim):
        raise UsageError(f"{path}: matrix shape {M.shape} does not match {tgt.dim} x {src.dim}")
    return HopfMorphism(src, tgt, M)


# -- commands ----------------------------------------------------------------------


def cmd_build(args):
    text = _read(args.source)
    try:
        P = parse_presentation(text, env_field())
    except PresentationError as exc:
        raise UsageError(f"{args.source}: {exc}") from None
    try:
        cp = complete_rewriting(P, args.cap)
    except CompletionError as exc:
        raise Failure(str(exc)) from None
    H = make_hopf(cp.algebra, cp.comult, cp.counit, name=P.name)
    _write(args.output, HBXDocument.from_hopf(H, note=f"built from {os.path.basename(args.source)}").dumps())
    print(f"{P.name}: dimension {H.dim}", file=sys.stderr)
    return 0


def cmd_verify(args):
    H = load_hopf(args.file)
    probs = antipode_property_problems(H) + filtration_problems(H)
    report = {"dim": H.dim, "hopf": True, "property_problems": probs}
    _emit(report)
    if probs:
        raise Failure(probs[0])
    return 0


def cmd_invariants(args):
    H = load_hopf(args.file)
    fp = fingerprint(H).to_json()
    if args.json:
        _emit(fp)
    else:
        for k in sorted(fp):
            print(f"{k}: {fp[k]}")
    return 0


def cmd_dual(args):
    H = load_hopf(args.file)
    _write(args.output, HBXDocument.from_hopf(dual(H), note="dual").dumps())
    return 0


def cmd_tensor(args):
    H, K = load_hopf(args.a), load_hopf(args.b)
    _same_field(H, K)
    _write(args.output, HBXDocument.from_hopf(tensor_product(H, K), note="tensor product").dumps())
    return 0


def cmd_catalog(args):
    if args.action == "list":
        _emit({"entries": catalog_names()})
        return 0
    if not args.name:
        raise UsageError("catalog get needs a name")
    try:
        H = catalog_get(args.name, env_field())
    except CatalogError as exc:
        raise UsageError(str(exc)) from None
    _write(args.output, HBXDocument.from_hopf(H, note=f"catalog entry {args.name}").dumps())
    return 0


def cmd_reps(args):
    H = load_hopf(args.file)
    A = H.alg
    chars = characters(A)
    mods = simple_modules(A)
    doc = {
        "characters": [[a.to_text() for a in c] for c in chars],
        "characters_complete": chars.complete,
        "simple_modules": [
            {"dim": m.dim, "matrices": {A.label(k): _mat_json(M) for k, M in enumerate(m.matrices)}} for m in mods
        ],
        "radical_dim": radical(A).dim,
    }
    _emit(doc)
    return 0


def cmd_coradical(args):
    H = load_hopf(args.file)
    cor = coradical_filtration(H)
    _emit(
        {
            "coradical_type": list(cor.type),
            "block_sizes": list(cor.block_sizes),
            "filtration_dims": [U.dim for U in cor.filtration],
            "simple_subcoalgebras": [[H.element_text(v) for v in C.basis] for C in cor.simple_subcoalgebras],
        }
    )
    return 0


def _load_datum(path):
    try:
        doc = json.loads(_read(path))
        return CleftDatum.from_json(doc)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {path}: {exc}") from None
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CleftError):
            raise
        raise UsageError(f"malformed datum {path}: {exc}") from None


def cmd_cleft(args):
    d = _load_datum(args.datum)
    if args.action == "validate":
        rep = datum_validate(d)
        _emit({"ok": rep.ok, "checks": rep.lines()})
        if not rep.ok:
            raise Failure("datum conditions fail")
        return 0
    if args.action == "build":
        try:
            C = crossed_product(d)
        except CleftError as exc:
            raise Failure(str(exc)) from None
        _emit(
            {
                "dim": C.dim,
                "labels": list(C.labels),
                "unit": [a.to_text() for a in C.unit],
                "mult": [
                    [i, j, k, v.to_text()] for i in range(C.dim) for j in range(C.dim) for k, v in sorted(C.mult[i][j].items())
                ],
                "radical_dim": radical(C).dim,
            }
        )
        return 0
    try:
        norm = normalize_taft_datum(d)
    except CleftError as exc:
        raise Failure(str(exc)) from None
    _emit(
        {
            "canonical": norm.canonical,
            "datum": norm.datum.to_json(),
            "steps": [
                {
                    "name": st.name,
                    "s": [a.to_text() for a in st.transform.s],
                    "t": [a.to_text() for a in st.transform.t],
                    "flags": st.flags,
                }
                for st in norm.transcript
            ],
        }
    )
    return 0


def cmd_iso(args):
    H, K = load_hopf(args.a), load_hopf(args.b)
    _same_field(H, K)
    res = iso_search(H, K, budget=args.budget)
    doc = {"status": res.status, "reason": res.reason}
    if res.morphism is not None:
        doc["matrix"] = _mat_json(res.morphism.matrix)
    _emit(doc)
    if res.status != "found":
        raise Failure(res.reason)
    return 0


def cmd_exactseq(args):
    objs = {}
    for key, path in (("A", args.A), ("H", args.H), ("B", args.B)):
        if path not in objs:
            objs[path] = load_hopf(path)
        objs[key] = objs[path]
    _same_field(*[objs[k] for k in "AHB"])
    iota = load_morphism(args.iota, objs)
    pi = load_morphism(args.pi, objs)
    if iota.source is not objs["A"] or iota.target is not objs["H"] or pi.source is not objs["H"] or pi.target is not objs["B"]:
        raise UsageError("morphisms must be iota: A -> H and pi: H -> B")
    rep = check_exact_sequence(iota, pi)
    _emit({"ok": rep.ok, "conditions": {k: {"ok": ok, "detail": d} for k, (ok, d) in rep.conditions.items()}})
    if not rep.ok:
        raise Failure("exactness fails")
    return 0


def cmd_suite(args):
    names = list(SUITES) if args.name == "all" else [args.name]
    reports = [SUITES[n]() for n in names]
    if len(reports) == 1:
        _emit(reports[0].to_json())
    else:
        _emit({"ok": all(r.ok for r in reports), "suites": [r.to_json() for r in reports]})
    for r in reports:
        for n, d in r.failures():
            print(f"{r.suite}: FAIL {n}: {d}", file=sys.stderr)
    if not all(r.ok for r in reports):
        raise Failure("suite checks fail")
    return 0


# -- parser -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="hopfkit", description="Exact finite-dimensional Hopf algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("build", help="compile a .hpf presentation to .hbx")
    s.add_argument("source")
    s.add_argument("-o", "--output", default=None)
    s.add_argument("--cap", type=int, default=16, help="degree cap for completion")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify", help="verify all Hopf axioms of an .hbx document")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("invariants", help="fingerprint of a Hopf algebra")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("dual", help="dual Hopf algebra")
    s.add_argument("file")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("tensor", help="tensor product of two Hopf algebras")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("catalog", help="list or export catalog entries")
    s.add_argument("action", choices=["list", "get"])
    s.add_argument("name", nargs="?")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("reps", help="characters and simple modules")
    s.add_argument("file")
    s.set_defaults(func=cmd_reps)

    s = sub.add_parser("coradical", help="coradical filtration")
    s.add_argument("file")
    s.set_defaults(func=cmd_coradical)

    s = sub.add_parser("cleft", help="cleft data over T")
    s.add_argument("action", choices=["build", "validate", "normalize"])
    s.add_argument("datum")
    s.set_defaults(func=cmd_cleft)

    s = sub.add_parser("iso", help="search a Hopf isomorphism")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--budget", type=int, default=20000)
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("exactseq", help="check an exact sequence A -> H -> B")
    s.add_argument("A")
    s.add_argument("H")
    s.add_argument("B")
    s.add_argument("--iota", required=True)
    s.add_argument("--pi", required=True)
    s.set_defaults(func=cmd_exactseq)

    s = sub.add_parser("suite", help="run verification suites")
    s.add_argument("name", choices=list(SUITES) + ["all"])
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"hopfkit: error: {exc}", file=sys.stderr)
        return 2
    except (Failure, HopfError, CleftError, AlgebraError) as exc:
        print(f"hopfkit: failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
