"""Batch command-line surface over the workbench.

Subcommands:

  ribbon enumerate    graded generator listing for one surface type
  homology            Betti table of the oriented graph complex
  euler               Euler characteristic, topological or orbifold
  ainf d              differential of a corolla generator
  ainf compose        graft two generators along named tails
  ainf check          d о d = 0 and Leibniz sweeps
  tft validate        Frobenius axioms of an algebra file
  tft eval            evaluate a surface diagram in an algebra
  operad-check        axiom sweeps for Assoc and Mod(Assoc)

All rational output is exact; integers print bare and everything else
prints as p/q.  Exit codes: 0 ok, 1 a check failed, 2 bad usage or bad
input.  Set SURFOP_CACHE to a writable directory to keep enumeration
results between runs.

Input file formats (JSON):

  algebra   {"dim": d, "mult": [[[p/q, ...], ...], ...],
             "trace": [p/q, ...]}
            with mult[i][j] the coordinate vector of e_i e_j.
  graph     {"attach": [...], "sigma": [...], "rotation": [...],
             "tails": {"3": "a", ...}}
            half-edge indexed; tails maps half-edge index to leg label.
  insertions {"a": [p/q, ...], ...}  leg label to coordinate vector.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import itertools
import json
import math
import os
import random
import sys
from fractions import Fraction

from . import __version__
from .ainf import ainf_compose, ainf_d, generator
from .assoc import Assoc, label_key
from .envelope import ModAssoc, SurfaceType
from .frobenius import (FrobeniusAlgebra, evaluate_surface, ground_field,
                        group_algebra_z2, matrix_algebra, validate_frobenius)
from .graphs import Graph, RibbonGraph
from .homology import dense_oracle
from .operads import (check_cyclic_axioms, check_modular_axioms,
                      ribbon_to_decorated)
from .ribbon_complex import (ModuliType, class_census, enumerate_generators,
                             harer_zagier, moduli_homology, oracle_enumerate,
                             orbifold_euler)

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2

# the brute oracle walks every pairing of 2E points; past this the walk
# stops being a desk-scale affair
ORACLE_EDGE_CAP = 5
DEFAULT_EDGE_CAP = 8


class UsageError(Exception):
    pass


class CheckFailure(Exception):
    pass


def _frac(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError("bad rational %r: %s" % (text, e))


def _frac_str(x):
    x = Fraction(x)
    return str(x)


# -- emitters ---------------------------------------------------------------

def emit(payload, fmt, out=None):
    """Print a payload of scalar fields plus optional columns/rows."""
    out = out or sys.stdout
    meta = {k: v for k, v in payload.items() if k not in ("columns", "rows")}
    columns = payload.get("columns")
    rows = payload.get("rows", [])
    if fmt == "json":
        doc = dict(meta)
        if columns is not None:
            doc["rows"] = [dict(zip(columns, r)) for r in rows]
        print(json.dumps(doc, indent=2), file=out)
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        for k, v in meta.items():
            out.write("# %s: %s\n" % (k, v))
        if columns is not None:
            w.writerow(columns)
            w.writerows(rows)
        return
    for k, v in meta.items():
        print("%s: %s" % (k, v), file=out)
    if columns is None:
        return
    if meta:
        print(file=out)
    cells = [[str(c) for c in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells])
              for i, h in enumerate(columns)]
    print("  ".join(h.ljust(w) for h, w in zip(columns, widths)), file=out)
    print("  ".join("-" * w for w in widths), file=out)
    for r in cells:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)), file=out)


# -- cache ------------------------------------------------------------------

def _cache_load(key):
    root = os.environ.get("SURFOP_CACHE")
    if not root:
        return None, None
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    path = os.path.join(root, "surfop-%s-%s.json" % (__version__, digest))
    if os.path.exists(path):
        try:
            with open(path) as fh:
                doc = json.load(fh)
            if doc.get("key") == key:
                return doc["payload"], path
        except (OSError, ValueError, KeyError):
            pass  # unreadable cache entries are recomputed, not fatal
    return None, path


def _cache_store(path, key, payload):
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({"key": key, "payload": payload}, fh)
    os.replace(tmp, path)


# -- shared parsing ---------------------------------------------------------

def _legs(text):
    if not text:
        return ()
    legs = tuple(tok for tok in text.split(",") if tok)
    if len(set(legs)) != len(legs):
        raise UsageError("leg labels must be distinct: %r" % (text,))
    return legs


def _moduli_type(args):
    legs = _legs(getattr(args, "legs", None))
    if args.g < 0 or args.n < 1:
        raise UsageError("need genus >= 0 and at least one boundary cycle")
    t = ModuliType(args.g, args.n, legs, bool(getattr(args, "labeled",
                                                      False)))
    if not t.is_stable():
        raise UsageError(
            "unstable type: stability requires 4g + 2n + #legs >= 5, "
            "got 4*%d + 2*%d + %d = %d"
            % (t.genus, t.n_cycles, len(legs),
               4 * t.genus + 2 * t.n_cycles + len(legs)))
    return t


def _cap_guard(t, args):
    cap = args.max_edges if args.max_edges is not None else DEFAULT_EDGE_CAP
    if t.max_edges() > cap:
        raise UsageError(
            "the complex of this type reaches %d edges, above the cap of "
            "%d; raise --max-edges to proceed" % (t.max_edges(), cap))


def _type_slug(t):
    legs = ",".join(str(lab) for lab in t.tails)
    return "g%d n%d legs[%s] labeled=%s" % (t.genus, t.n_cycles, legs,
                                            t.labeled_cycles)


def _load_json(path, what):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError("cannot read %s file %r: %s" % (what, path, e))
    except json.JSONDecodeError as e:
        raise UsageError("malformed JSON in %s file %r at line %d column "
                         "%d (char %d): %s"
                         % (what, path, e.lineno, e.colno, e.pos, e.msg))


def _algebra_from(args):
    if args.builtin:
        return {"ground": ground_field, "m2": matrix_algebra,
                "z2": group_algebra_z2}[args.builtin]()
    doc = _load_json(args.algebra, "algebra")
    try:
        dim = doc["dim"]
        mult = [[[_frac(c) for c in col] for col in row]
                for row in doc["mult"]]
        trace = [_frac(c) for c in doc["trace"]]
    except (KeyError, TypeError) as e:
        raise UsageError("algebra file %r needs dim, mult and trace: %s"
                         % (args.algebra, e))
    a = FrobeniusAlgebra(mult, trace, name=os.path.basename(args.algebra))
    if a.dim != dim:
        raise UsageError("algebra file %r declares dim %r but trace has "
                         "length %d" % (args.algebra, dim, a.dim))
    return a


def _graph_from(path):
    doc = _load_json(path, "graph")
    try:
        attach = list(doc["attach"])
        sigma = list(doc["sigma"])
        rotation = list(doc["rotation"])
        tails = {int(k): v for k, v in doc.get("tails", {}).items()}
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError("graph file %r needs attach, sigma and rotation "
                         "lists: %s" % (path, e))
    try:
        return RibbonGraph(Graph(attach, sigma), rotation, tails)
    except ValueError as e:
        raise UsageError("graph file %r is not a valid ribbon graph: %s"
                         % (path, e))


# -- generator display ------------------------------------------------------

def _generator_words(rg):
    """One readable word per vertex: tails by label, paired half-edges
    by a shared edge number."""
    edge_of = {}
    for k, (h1, h2) in enumerate(sorted(rg.graph.edges())):
        edge_of[h1] = edge_of[h2] = k
    words = []
    for v in range(rg.n_vertices):
        toks = []
        for h in rg.cyclic_order(v):
            if h in rg.tails:
                toks.append(str(rg.tails[h]))
            else:
                toks.append("e%d" % edge_of[h])
        words.append("(" + " ".join(toks) + ")")
    return " ".join(words)


def _cycle_words(gen):
    if gen.cycle_labels is None:
        return "-"
    parts = []
    for i, _ in enumerate(gen.rg.boundary_cycles()):
        parts.append("%d:%s" % (i, gen.cycle_labels[i]))
    return " ".join(parts)


# -- commands ---------------------------------------------------------------

def cmd_ribbon_enumerate(args):
    t = _moduli_type(args)
    _cap_guard(t, args)
    key = "enumerate %s" % _type_slug(t)
    payload, path = _cache_load(key)
    if payload is None:
        graded = enumerate_generators(t)
        rows = []
        for deg in sorted(graded):
            for gen in graded[deg]:
                rows.append([deg, gen.n_edges(), gen.automorphism_count(),
                             _generator_words(gen.rg), _cycle_words(gen),
                             repr(gen.code)])
        payload = {
            "command": "ribbon enumerate",
            "type": _type_slug(t),
            "degrees": " ".join("%d:%d" % (d, len(graded[d]))
                                for d in sorted(graded)),
            "generators": sum(len(v) for v in graded.values()),
            "columns": ["degree", "edges", "aut", "generator", "cycles",
                        "code"],
            "rows": rows,
        }
        _cache_store(path, key, payload)
    if args.oracle:
        if t.tails or t.labeled_cycles:
            raise UsageError("--oracle covers leg-free unlabeled types "
                             "only; this type has legs or labeled cycles")
        if t.max_edges() > ORACLE_EDGE_CAP:
            raise UsageError(
                "--oracle is capped at %d edges (it walks every pairing "
                "of 2E half-edges) and this type reaches %d"
                % (ORACLE_EDGE_CAP, t.max_edges()))
        ours = sum(class_census(t).values())
        brute = oracle_enumerate(t, t.max_edges())
        payload["oracle"] = "%d == %d" % (ours, brute)
        if ours != brute:
            emit(payload, args.format)
            raise CheckFailure("class census %d disagrees with the brute "
                               "oracle %d" % (ours, brute))
    emit(payload, args.format)
    return EXIT_OK


def cmd_homology(args):
    t = _moduli_type(args)
    _cap_guard(t, args)
    try:
        profile = moduli_homology(t)
    except ValueError as e:
        # betti() refuses complexes whose boundary fails to square to
        # zero; that is an internal bug and must be loud
        raise CheckFailure("internal consistency failure: %s" % e)
    rows = [[k, profile.dims[k], profile.ranks[k], profile.betti[k]]
            for k in range(len(profile.dims))]
    chi = sum((-1) ** k * d for k, d in enumerate(profile.dims))
    payload = {
        "command": "homology",
        "type": _type_slug(t),
        "betti": " ".join(str(b) for b in profile.betti),
        "euler": str(chi),
        "columns": ["degree", "dim", "rank_d", "betti"],
        "rows": rows,
    }
    if args.dense_check:
        cells = max((profile.dims[k] * profile.dims[k + 1]
                     for k in range(len(profile.dims) - 1)), default=0)
        if cells > 200 * 200:
            raise UsageError("--dense-check is capped at 200x200 cells; "
                             "largest boundary here has %d" % cells)
        dense = moduli_homology(t, rank_fn=dense_oracle)
        payload["dense_check"] = "%r == %r" % (list(profile.betti),
                                               list(dense.betti))
        if dense.betti != profile.betti:
            emit(payload, args.format)
            raise CheckFailure("sparse and dense Betti numbers disagree: "
                               "%r vs %r" % (profile.betti, dense.betti))
    emit(payload, args.format)
    return EXIT_OK


def cmd_euler(args):
    t = _moduli_type(args)
    _cap_guard(t, args)
    payload = {"command": "euler", "type": _type_slug(t)}
    if args.orbifold:
        value = orbifold_euler(t)
        payload["orbifold_euler"] = _frac_str(value)
        if not t.tails:
            want = harer_zagier(t.genus, t.n_cycles)
            if not t.labeled_cycles:
                want = want / math.factorial(t.n_cycles)
            payload["oracle"] = "%s == %s" % (_frac_str(value),
                                              _frac_str(want))
            if value != want:
                emit(payload, args.format)
                raise CheckFailure(
                    "orbifold Euler %s disagrees with the closed-form "
                    "oracle %s" % (_frac_str(value), _frac_str(want)))
        else:
            payload["oracle"] = "none for types with legs"
    else:
        graded = enumerate_generators(t)
        chi = sum((-1) ** d * len(gens) for d, gens in graded.items())
        payload["euler"] = str(chi)
    emit(payload, args.format)
    return EXIT_OK


def _parse_cycle(args):
    if args.corolla is not None:
        if args.corolla < 3:
            raise UsageError("corollas need at least 3 labels")
        return tuple(range(1, args.corolla + 1))
    labels = _legs(args.labels)
    if len(labels) < 3:
        raise UsageError("need at least 3 labels")
    return labels


def _vector_rows(vec):
    rows = []
    for gen in sorted(vec, key=lambda g: g.code):
        rows.append([_frac_str(vec[gen]), _generator_words(gen.rg)])
    return rows


def cmd_ainf_d(args):
    gen = generator(_parse_cycle(args))
    vec = ainf_d(gen)
    payload = {
        "command": "ainf d",
        "input": _generator_words(gen.rg),
        "degree": gen.degree,
        "terms": len(vec),
        "columns": ["coefficient", "generator"],
        "rows": _vector_rows(vec),
    }
    emit(payload, args.format)
    return EXIT_OK


def cmd_ainf_compose(args):
    left = generator(_legs(args.left))
    right = generator(_legs(args.right))
    pair = args.at.split(":")
    if len(pair) != 2:
        raise UsageError("--at needs LEFTLABEL:RIGHTLABEL")
    vec = ainf_compose(left, pair[0], right, pair[1])
    payload = {
        "command": "ainf compose",
        "left": _generator_words(left.rg),
        "right": _generator_words(right.rg),
        "at": args.at,
        "terms": len(vec),
        "columns": ["coefficient", "generator"],
        "rows": _vector_rows(vec),
    }
    emit(payload, args.format)
    return EXIT_OK


def _distinct_cycles(n):
    """Cyclic orders on 1..n, one representative per rotation class."""
    for rest in itertools.permutations(range(2, n + 1)):
        yield (1,) + rest


def _is_zero(vec):
    return not vec


def _vec_sub(u, w):
    out = dict(u)
    for gen, c in w.items():
        v = out.get(gen, Fraction(0)) - c
        if v:
            out[gen] = v
        elif gen in out:
            del out[gen]
    return out


def _vec_scale(u, c):
    return {gen: c * v for gen, v in u.items()}


def cmd_ainf_check(args):
    rows = []
    checked = 0
    for n in range(3, args.corolla_max + 1):
        for cyc in _distinct_cycles(n):
            if not _is_zero(ainf_d(ainf_d(generator(cyc)))):
                raise CheckFailure("d squared is nonzero on corolla %r"
                                   % (cyc,))
            checked += 1
        rows.append(["d o d on corollas", str(n), "ok"])
    for p in range(3, args.corolla_max + 1):
        for q in range(3, args.corolla_max + 1):
            if p + q - 2 > args.corolla_max + 1:
                continue
            x = generator(tuple(range(1, p + 1)))
            y = generator(tuple("y%d" % k for k in range(1, q + 1)))
            for i in range(1, p + 1):
                for j in range(1, q + 1):
                    glued = ainf_compose(x, i, y, "y%d" % j)
                    if not _is_zero(ainf_d(ainf_d(glued))):
                        raise CheckFailure(
                            "d squared is nonzero on the (%d, %d) graft "
                            "at (%d, y%d)" % (p, q, i, j))
                    checked += 1
            rows.append(["d o d on grafts", "%d+%d" % (p, q), "ok"])
    rng = random.Random(args.seed)
    for _ in range(args.samples):
        p = rng.randint(3, max(3, args.corolla_max - 1))
        q = rng.randint(3, max(3, args.corolla_max - 1))
        xl = ["x%d" % k for k in range(p)]
        yl = ["y%d" % k for k in range(q)]
        rng.shuffle(xl)
        rng.shuffle(yl)
        x = generator(tuple(xl))
        y = generator(tuple(yl))
        i = rng.choice(xl)
        j = rng.choice(yl)
        lhs = ainf_d(ainf_compose(x, i, y, j))
        rhs = ainf_compose(ainf_d(x), i, y, j)
        sx = Fraction(-1) ** x.degree
        for gen, c in ainf_compose(x, i, ainf_d(y), j).items():
            v = rhs.get(gen, Fraction(0)) + sx * c
            if v:
                rhs[gen] = v
            elif gen in rhs:
                del rhs[gen]
        if not _is_zero(_vec_sub(lhs, rhs)):
            raise CheckFailure("Leibniz fails on %r composed with %r at "
                               "(%s, %s)" % (xl, yl, i, j))
        checked += 1
    rows.append(["Leibniz on random grafts", str(args.samples), "ok"])
    payload = {
        "command": "ainf check",
        "checks": checked,
        "ok": True,
        "columns": ["family", "size", "verdict"],
        "rows": rows,
    }
    emit(payload, args.format)
    return EXIT_OK


def cmd_tft_validate(args):
    a = _algebra_from(args)
    report = validate_frobenius(a)
    payload = {
        "command": "tft validate",
        "algebra": a.name,
        "dim": a.dim,
        "checks": report.checks,
        "ok": report.ok,
    }
    if not report.ok:
        payload["counterexample"] = report.counterexample
        emit(payload, args.format)
        raise CheckFailure("algebra %s fails the Frobenius axioms: %s"
                           % (a.name, report.counterexample))
    emit(payload, args.format)
    return EXIT_OK


def cmd_tft_eval(args):
    a = _algebra_from(args)
    rg = _graph_from(args.graph)
    insertions = {}
    if args.insertions:
        doc = _load_json(args.insertions, "insertions")
        for lab, vec in doc.items():
            insertions[lab] = [_frac(c) for c in vec]
    open_labels = _legs(args.open)
    decorated = ribbon_to_decorated(rg)
    try:
        value = evaluate_surface(a, decorated, insertions, open_labels)
    except ValueError as e:
        raise UsageError(str(e))
    payload = {"command": "tft eval", "algebra": a.name,
               "graph": _generator_words(rg)}
    if open_labels:
        payload["open"] = ",".join(str(x) for x in open_labels)
        payload["columns"] = ["slot", "coefficient"]
        rows = []
        axes = value.labels
        for pos, idx in enumerate(itertools.product(range(value.dim),
                                                    repeat=len(axes))):
            rows.append([" ".join("%s=%d" % (lab, k)
                                  for lab, k in zip(axes, idx)),
                         _frac_str(value.coeffs[pos])])
        payload["rows"] = rows
    else:
        payload["value"] = _frac_str(value)
    emit(payload, args.format)
    return EXIT_OK


def cmd_operad_check(args):
    if args.which == "assoc":
        report = check_cyclic_axioms(Assoc(), size_bound=args.bound)
    else:
        Q = ModAssoc(max_genus=2, max_cycles=5, max_edges=args.bound)
        report = check_modular_axioms(Q, size_bound=args.bound,
                                      weight=SurfaceType.normal_edges,
                                      max_weight=args.bound)
    payload = {
        "command": "operad-check",
        "which": args.which,
        "bound": args.bound,
        "checks": report.checks,
        "ok": report.ok,
    }
    if not report.ok:
        payload["counterexample"] = str(report.counterexample)
        emit(payload, args.format)
        raise CheckFailure("axiom sweep found a counterexample: %s"
                           % (report.counterexample,))
    emit(payload, args.format)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _add_type_flags(p):
    p.add_argument("--g", type=int, required=True, help="genus")
    p.add_argument("--n", type=int, required=True,
                   help="number of boundary cycles")
    p.add_argument("--legs", default="", help="comma-separated leg labels")
    p.add_argument("--labeled", action="store_true",
                   help="distinguish the boundary cycles")
    p.add_argument("--max-edges", type=int, default=None,
                   help="edge cap guard (default %d)" % DEFAULT_EDGE_CAP)


def _add_format_flag(p):
    p.add_argument("--format", choices=("json", "table", "csv"),
                   default="table")


def build_parser():
    top = argparse.ArgumentParser(
        prog="surfop",
        description="ribbon graph, operad and surface-evaluation "
                    "workbench")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    ribbon = sub.add_parser("ribbon", help="ribbon graph complexes")
    rsub = ribbon.add_subparsers(dest="action", required=True)
    p = rsub.add_parser("enumerate", help="list generators by degree")
    _add_type_flags(p)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check class counts against the brute "
                        "pairing walk")
    _add_format_flag(p)
    p.set_defaults(func=cmd_ribbon_enumerate)

    p = sub.add_parser("homology", help="Betti numbers of one type")
    _add_type_flags(p)
    p.add_argument("--dense-check", action="store_true",
                   help="recompute every rank with the dense oracle")
    _add_format_flag(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("euler", help="Euler characteristics")
    _add_type_flags(p)
    p.add_argument("--orbifold", action="store_true",
                   help="automorphism-weighted sum with the closed-form "
                        "comparison")
    _add_format_flag(p)
    p.set_defaults(func=cmd_euler)

    ainf = sub.add_parser("ainf", help="the A-infinity layer")
    asub = ainf.add_subparsers(dest="action", required=True)
    p = asub.add_parser("d", help="differential of one generator")
    p.add_argument("--corolla", type=int, default=None,
                   help="corolla on labels 1..K")
    p.add_argument("--labels", default="",
                   help="explicit cyclic order, comma separated")
    _add_format_flag(p)
    p.set_defaults(func=cmd_ainf_d)
    p = asub.add_parser("compose", help="graft two corollas")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--at", required=True, metavar="LEFT:RIGHT")
    _add_format_flag(p)
    p.set_defaults(func=cmd_ainf_compose)
    p = asub.add_parser("check", help="d o d and Leibniz sweeps")
    p.add_argument("--corolla-max", type=int, default=6)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_format_flag(p)
    p.set_defaults(func=cmd_ainf_check)

    tft = sub.add_parser("tft", help="Frobenius surface evaluation")
    tsub = tft.add_subparsers(dest="action", required=True)
    for name in ("validate", "eval"):
        p = tsub.add_parser(name)
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--algebra", help="algebra JSON file")
        group.add_argument("--builtin", choices=("ground", "m2", "z2"))
        if name == "eval":
            p.add_argument("--graph", required=True,
                           help="ribbon graph JSON file")
            p.add_argument("--insertions", default=None,
                           help="insertions JSON file")
            p.add_argument("--open", default="",
                           help="legs to leave open, comma separated")
        _add_format_flag(p)
        p.set_defaults(func=cmd_tft_validate if name == "validate"
                       else cmd_tft_eval)

    p = sub.add_parser("operad-check", help="axiom sweeps")
    p.add_argument("which", choices=("assoc", "mod-assoc"))
    p.add_argument("--bound", type=int, default=None)
    _add_format_flag(p)
    p.set_defaults(func=cmd_operad_check)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "bound", None) is None and \
            getattr(args, "which", None):
        args.bound = 6 if args.which == "assoc" else 4
    try:
        return args.func(args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except CheckFailure as e:
        print("FAIL: %s" % e, file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
