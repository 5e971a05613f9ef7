"""Command line front end: ``exotic4 build|verify|export|crosscheck``.

Exit codes: 0 ok, 1 undecided, 2 usage error, 3 a claim was refuted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .assemble import AssembledManifold
from .blocks import BlockDescriptor, build_gurtas, lemma_derivations
from .constructions import (
    REFUTED,
    TRIVIAL,
    UNDECIDED_CLAIM,
    VERIFIED,
    build_X,
    check_claim,
    classify_homeo,
    verify_simply_connected,
)
from .fpgroup.abelian import abelianize
from .fpgroup.certificates import verify_certificate
from .fpgroup.tietze import DEFAULT_TIETZE_BUDGET
from .manifest import BLOCKS, FAMILIES, block_manifest, build_from_recipe, dumps, make_manifest

EXIT_OK, EXIT_UNDECIDED, EXIT_USAGE, EXIT_REFUTED = 0, 1, 2, 3
_EXIT = {VERIFIED: EXIT_OK, UNDECIDED_CLAIM: EXIT_UNDECIDED, REFUTED: EXIT_REFUTED}


class UsageError(Exception):
    pass


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for {args.family}")


def _scalar(values, name, default):
    if values is None:
        return default
    if len(values) != 1:
        raise UsageError(f"--{name} takes a single value here")
    return values[0]


def params_from_args(args) -> dict:
    fam = args.family
    if fam is None:
        raise UsageError("a family (or --manifest) is required")
    rel = {"relations": args.relations} if args.relations != "vanishing" else {}
    if fam in ("X", "X0"):
        _need(args, "n", "k")
        return {"n": args.n, "k": args.k, **rel}
    if fam == "Xm":
        _need(args, "n", "k", "m")
        return {"n": args.n, "k": args.k, "m": args.m, **rel}
    if fam == "Xfree":
        _need(args, "n", "k")
        out = {"n": args.n, "k": args.k, **rel}
        if args.p is not None:
            out["p"] = list(args.p)
        if args.q is not None:
            out["q"] = list(args.q)
        return out
    if fam == "Xcyclic":
        _need(args, "n", "k", "q")
        return {"n": args.n, "k": args.k, "q": list(args.q), **rel}
    if fam.startswith("block:"):
        name = fam.split(":", 1)[1]
        if name not in BLOCKS:
            raise UsageError(f"unknown block {name!r}; choose from {', '.join(BLOCKS)}")
        if name == "korkmaz":
            _need(args, "k")
            return {"k": args.k, **rel}
        if name == "gurtas":
            _need(args, "n", "k")
            return {"n": args.n, "k": args.k, **rel}
        if name == "hyperelliptic":
            _need(args, "g")
            return {"g": args.g}
        if name == "familyA":
            _need(args, "n", "p", "q")
            return {"n": args.n, "p": list(args.p), "q": list(args.q)}
        _need(args, "n")
        return {"n": args.n,
                "p": _scalar(args.p, "p", 1),
                "m": args.m if args.m is not None else 1,
                "q": _scalar(args.q, "q", 1)}
    raise UsageError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)} or block:<name>")


def _build(args):
    params = params_from_args(args)
    try:
        obj = build_from_recipe(args.family, params)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    return params, obj


def _verify(obj, args):
    if not isinstance(obj, AssembledManifold):
        return None, None, None
    verdict = verify_simply_connected(obj, coset_cap=args.coset_cap, tietze_budget=args.tietze_budget)
    status = check_claim(obj.claim, verdict)
    homeo = None
    if verdict.status == TRIVIAL and obj.claim == "simply connected":
        homeo = classify_homeo(obj, verdict)
    return verdict, status, homeo


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    t0 = time.perf_counter()
    params, obj = _build(args)
    verdict = status = homeo = None
    if not args.no_verify:
        verdict, status, homeo = _verify(obj, args)
    doc = make_manifest(args.family, params, obj, verdict, status, homeo, time.perf_counter() - t0)
    _emit(dumps(doc), args.out)
    return EXIT_OK


def _report(obj, verdict, status, homeo) -> list:
    lines = [f"{obj.label}: {verdict.summary()}"]
    lines.append(f"  H1 = {verdict.abelian}")
    if verdict.tietze is not None:
        T = verdict.tietze
        lines.append(f"  tietze: {T.presentation} after {len(T.trace)} eliminations")
        lines.extend(f"    {step}" for step in T.trace)
    if verdict.quotient is not None:
        q = verdict.quotient
        lines.append(f"  nonabelian quotient in S{q.degree}, checked on every input relator")
    if obj.claim:
        lines.append(f"  claim: {obj.claim} -> {status}")
    if homeo is not None:
        lines.append(f"  homeomorphic to {homeo.render()}")
    for note in obj.notes:
        lines.append(f"  note: {note}")
    return lines


def cmd_verify(args) -> int:
    if args.manifest:
        with open(args.manifest) as fh:
            doc = json.load(fh)
        family, params = doc["family"], doc["params"]
        try:
            obj = build_from_recipe(family, params)
        except (ValueError, KeyError) as exc:
            raise UsageError(str(exc)) from exc
    else:
        params, obj = _build(args)
    if isinstance(obj, BlockDescriptor):
        if obj.complement is None:
            print(f"{obj.label}: metadata only (no presentation)")
            return EXIT_OK
        print(f"{obj.label}: H1 = {abelianize(obj.complement)}")
        return EXIT_OK
    verdict, status, homeo = _verify(obj, args)
    _emit("\n".join(_report(obj, verdict, status, homeo)) + "\n", args.out)
    return _EXIT[status]


def cmd_export(args) -> int:
    if args.manifest:
        with open(args.manifest) as fh:
            doc = json.load(fh)
        obj = build_from_recipe(doc["family"], doc["params"])
    else:
        _, obj = _build(args)
    if isinstance(obj, BlockDescriptor):
        if args.format == "json":
            _emit(dumps(block_manifest(obj)), args.out)
            return EXIT_OK
        if obj.complement is None:
            raise UsageError(f"{obj.label} has no presentation to export")
        P = obj.complement
    else:
        if args.block:
            raise UsageError("--block applies to block:<name> families")
        P = obj.presentation
    if args.format == "json":
        doc = {"label": P.label, "generators": list(P.generators),
               "relators": [str(r) for r in P.relators], "text": str(P)}
        _emit(dumps(doc), args.out)
    else:
        _emit(str(P) + "\n", args.out)
    return EXIT_OK


def crosscheck_one(n: int, k: int, coset_cap, tietze_budget) -> tuple:
    """Both relation forms, lemma certificates, and the closed-form numbers."""
    M = build_X(n, k)
    L = build_X(n, k, relations="lemma")
    problems = []
    v = verify_simply_connected(M, coset_cap, tietze_budget)
    w = verify_simply_connected(L, coset_cap, tietze_budget)
    if abelianize(M.presentation) != abelianize(L.presentation):
        problems.append("relation forms disagree on H1")
    Y = build_gurtas(n, k)
    for name, der in lemma_derivations(Y).items():
        if not verify_certificate(Y.presentation, der.word, der.certificate):
            problems.append(f"certificate {name} rejected")
    ch = M.char
    expected = (8 * n + 4 * k - 4, -4 * n, 4 * n + 8 * k - 8, n + k - 1)
    if ch.core() != expected:
        problems.append(f"char {ch.core()} != {expected}")
    statuses = {check_claim(M.claim, v), check_claim(L.claim, w)}
    if REFUTED in statuses:
        status = REFUTED
    elif UNDECIDED_CLAIM in statuses:
        status = UNDECIDED_CLAIM
    else:
        status = VERIFIED
    if problems and status == VERIFIED:
        status = REFUTED
    homeo = classify_homeo(M, v).render() if v.status == TRIVIAL else "-"
    return n, k, status, v.summary(), w.summary(), homeo, tuple(problems)


def cmd_crosscheck(args) -> int:
    ns = args.n or [1, 2, 3]
    ks = args.k or [1, 2, 3]
    grid = [(n, k) for n in ns for k in ks]
    if any(x < 1 for pair in grid for x in pair):
        raise UsageError("n and k must be >= 1")
    jobs = max(1, args.jobs)
    cells = [(n, k, args.coset_cap, args.tietze_budget) for n, k in grid]
    if jobs == 1:
        results = [crosscheck_one(*c) for c in cells]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(crosscheck_one, *zip(*cells)))
    worst = EXIT_OK
    for n, k, status, sv, sl, homeo, problems in results:
        print(f"X({n},{k}): {status}; vanishing form {sv}; lemma form {sl}; {homeo}")
        for p in problems:
            print(f"  problem: {p}")
        worst = max(worst, _EXIT[status])
    return worst


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exotic4", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family=True, multi=False):
        if family:
            p.add_argument("family", nargs="?", help="X, Xm, X0, Xfree, Xcyclic or block:<name>")
        if multi:
            p.add_argument("--n", type=int, nargs="+")
            p.add_argument("--k", type=int, nargs="+")
        else:
            p.add_argument("--n", type=int)
            p.add_argument("--k", type=int)
            p.add_argument("--m", type=int)
            p.add_argument("--g", type=int)
            p.add_argument("--p", type=int, nargs="+")
            p.add_argument("--q", type=int, nargs="+")
            p.add_argument("--relations", choices=("vanishing", "lemma"), default="vanishing")
        p.add_argument("--coset-cap", type=int, default=None)
        p.add_argument("--tietze-budget", type=int, default=DEFAULT_TIETZE_BUDGET)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out")

    b = sub.add_parser("build", help="build a construction and write its manifest")
    common(b)
    b.add_argument("--no-verify", action="store_true")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="verify the fundamental-group claim")
    common(v)
    v.add_argument("--manifest")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="serialize a presentation")
    common(e)
    e.add_argument("--manifest")
    e.add_argument("--format", choices=("json", "fp-text"), default="fp-text")
    e.add_argument("--block", action="store_true", help="emit the block manifest")
    e.set_defaults(func=cmd_export)

    c = sub.add_parser("crosscheck", help="verify the X(n,k) grid both ways")
    common(c, family=False, multi=True)
    c.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.coset_cap is not None and args.coset_cap < 1:
        parser.error("--coset-cap must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"exotic4: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
