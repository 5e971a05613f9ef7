"""One test group per acceptance criterion; each records a PASS/FAIL line.

The lines are printed as the tests run and collected again in the
"acceptance criteria" section of the terminal summary.
"""

import os
import subprocess
import sys
import time

import pytest
import test_abelian
import test_surface
import test_words
from acceptance_log import record
from golden_io import load

from exotic4.assemble import substitute_identifications
from exotic4.blocks import (
    build_gurtas,
    build_korkmaz,
    build_luttinger_family_A,
    build_luttinger_family_B,
    lemma_derivations,
)
from exotic4.constructions import (
    FREE,
    INFINITE_CYCLIC,
    TRIVIAL,
    build_X,
    build_X0,
    build_X_free,
    build_X_m,
    check_claim,
    classify_homeo,
    verify_simply_connected,
)
from exotic4.fpgroup import (
    AbelianInvariants,
    Complete,
    parse_word,
    relator_key,
    search_certificate,
    verify_certificate,
)
from exotic4.manifest import build_from_recipe, dumps, make_manifest, strip_timing

CAP = 10**6
GRID = [(n, k) for n in (1, 2, 3) for k in (1, 2, 3)]


# 1 -----------------------------------------------------------------------
@pytest.mark.parametrize("n,k", GRID)
def test_criterion_1_triviality(n, k):
    t0 = time.perf_counter()
    v = verify_simply_connected(build_X(n, k), coset_cap=CAP)
    dt = time.perf_counter() - t0
    ok = v.status == TRIVIAL and v.cosets == Complete(1) and dt < 120
    record(1, ok, f"X({n},{k}) {v.summary()} in {dt:.2f}s")
    assert ok


# 2 -----------------------------------------------------------------------
@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 1)])
@pytest.mark.parametrize("m", [2, 3])
def test_criterion_2_m_family(n, k, m):
    t0 = time.perf_counter()
    v = verify_simply_connected(build_X_m(n, k, m), coset_cap=CAP)
    dt = time.perf_counter() - t0
    ok = v.status == TRIVIAL and v.cosets == Complete(1) and dt < 120
    record(2, ok, f"X({n},{k},{m}) {v.summary()} in {dt:.2f}s")
    assert ok


# 3 -----------------------------------------------------------------------
def test_criterion_3_characteristic_numbers():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 6):
        for k in range(1, 6):
            ch = build_X(n, k).char
            want = (8 * n + 4 * k - 4, -4 * n, 4 * n + 8 * k - 8, n + k - 1)
            if ch.core() != want:
                bad.append((n, k, "numbers"))
            if ch.c1sq != 3 * ch.sigma + 2 * ch.e or 4 * ch.chi_h != ch.e + ch.sigma:
                bad.append((n, k, "identities"))
            if (ch.b2plus, ch.b2minus) != (2 * n + 2 * k - 3, 6 * n + 2 * k - 3):
                bad.append((n, k, "homeo"))
    dt = time.perf_counter() - t0
    renders = {}
    for n, k in [(1, 1), (1, 2)]:
        M = build_X(n, k)
        renders[(n, k)] = classify_homeo(M, verify_simply_connected(M)).render()
    ok = (not bad and dt < 1 and renders[(1, 1)] == "1 CP2 # 5 CP2bar"
          and renders[(1, 2)] == "3 CP2 # 7 CP2bar")
    record(3, ok, f"25 instances in {dt:.3f}s; X(1,1) ~ {renders[(1, 1)]}, X(1,2) ~ {renders[(1, 2)]}"
           + (f"; mismatches {bad}" if bad else ""))
    assert ok


# 4 -----------------------------------------------------------------------
@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("k", [3, 4, 5])
def test_criterion_4_free_rank(n, k):
    t0 = time.perf_counter()
    M = build_X_free(n, k)
    v = verify_simply_connected(M)
    dt = time.perf_counter() - t0
    r = k - 2
    T = v.tietze.presentation
    ok = (v.status in (FREE, INFINITE_CYCLIC) and v.free_rank == r and T.rank == r
          and not T.relators and v.abelian == AbelianInvariants(r, ()) and dt < 60)
    record(4, ok, f"n={n} k={k} {v.summary()} via {T} in {dt:.2f}s")
    assert ok


# 5 -----------------------------------------------------------------------
@pytest.mark.parametrize(
    "n,k",
    [
        (1, 1),
        pytest.param(1, 2, marks=pytest.mark.xfail(
            strict=True, reason="the presentation maps onto S3, so its group is not Z")),
    ],
)
def test_criterion_5_X0(n, k):
    v = verify_simply_connected(build_X0(n, k))
    T = v.tietze.presentation
    ok = v.abelian == AbelianInvariants(1, ()) and T.rank == 1 and not T.relators
    extra = f"; nonabelian quotient in S{v.quotient.degree}" if v.quotient else ""
    record(5, ok, f"X({n},{k})_0 H1={v.abelian}, Tietze {T}{extra}")
    assert ok


# 6 -----------------------------------------------------------------------
def _check_certs(P, items):
    checked = tampered = 0
    for name, word, cert in items:
        assert verify_certificate(P, word, cert), name
        checked += 1
        for i in range(len(cert)):
            assert not verify_certificate(P, word, cert.flip_sign(i)), (name, i)
            tampered += 1
    return checked, tampered


@pytest.mark.parametrize("k", [1, 2])
def test_criterion_6_certificates(k):
    checked = tampered = 0
    Y = build_korkmaz(k)
    items = [(nm, d.word, d.certificate) for nm, d in lemma_derivations(Y).items()]
    target = parse_word("b2*b3*[a4,b4]^-1") if k == 2 else parse_word("[a2,b2]^-1")
    found = search_certificate(Y.presentation, target, 8, 12, max_nodes=100000)
    items.append(("searched commutator relation", target, found))
    c, t = _check_certs(Y.presentation, items)
    checked, tampered = checked + c, tampered + t
    G = build_gurtas(2, k)
    e_items = [(nm, d.word, d.certificate) for nm, d in lemma_derivations(G).items() if nm.startswith("e")]
    assert len(e_items) == 2
    c, t = _check_certs(G.presentation, e_items)
    checked, tampered = checked + c, tampered + t
    record(6, True, f"k={k}: {checked} certificates accepted, {tampered} tampered copies rejected")


# 7 -----------------------------------------------------------------------
def _keys(P):
    return {relator_key(r) for r in P.relators}


@pytest.mark.parametrize(
    "name,params",
    [("family_A_n2.txt", ("block:familyA", {"n": 2, "p": [1, 1], "q": [1, 1]})),
     ("family_B_n2.txt", ("block:familyB", {"n": 2}))],
)
def test_criterion_7_block_goldens(name, params):
    P = build_from_recipe(*params).presentation
    ok = _keys(load(name).literal()) == _keys(P)
    record(7, ok, f"{name} {'matches' if ok else 'differs'}")
    assert ok


@pytest.mark.xfail(strict=True, reason="the literal X(1,1) display conflicts with the family B display")
def test_criterion_7_X11_golden():
    G = load("X_1_1.txt")
    P = substitute_identifications(build_X(1, 1, relations="lemma"))
    ok = _keys(G.literal()) == _keys(P)
    fixed = _keys(G.corrected()) == _keys(P)
    record(7, ok, f"X_1_1.txt literal {'matches' if ok else 'differs'}"
           f" (matches after its {len(G.drop) + len(G.replace)} errata: {fixed})")
    assert ok


# 8 -----------------------------------------------------------------------
def test_criterion_8_engine_properties():
    t0 = time.perf_counter()
    props = [test_words.test_reduce_idempotent_and_matches_oracle,
             test_words.test_inverse_laws,
             test_words.test_map_word_is_a_homomorphism,
             test_words.test_exponent_sums_are_additive]
    for prop in props:
        prop()
    cases = test_words.PROPERTY.max_examples * len(props)
    test_surface.test_dehn_agrees_with_certificate_search_up_to_length_6()
    test_abelian.test_snf_agrees_with_naive_oracle_on_100_random_matrices()
    dt = time.perf_counter() - t0
    record(8, cases >= 10**4, f"{cases} word-algebra cases, Dehn vs search on genus-2 words of length <= 6, "
           f"SNF vs naive on 100 matrices, {dt:.1f}s")
    assert cases >= 10**4


# 9 -----------------------------------------------------------------------
SUITES = ([("X", {"n": n, "k": k}) for n, k in GRID]
          + [("Xm", {"n": n, "k": k, "m": m}) for n, k in [(1, 1), (1, 2), (2, 1)] for m in (2, 3)]
          + [("Xfree", {"n": n, "k": k}) for n in (1, 2) for k in (3, 4, 5)]
          + [("X0", {"n": n, "k": k}) for n, k in [(1, 1), (1, 2)]])


def _manifest(family, params):
    obj = build_from_recipe(family, params)
    v = verify_simply_connected(obj)
    status = check_claim(obj.claim, v)
    homeo = classify_homeo(obj, v) if v.status == TRIVIAL and obj.claim == "simply connected" else None
    return dumps(strip_timing(make_manifest(family, params, obj, v, status, homeo, 0.0)))


def test_criterion_9_determinism_in_process():
    same = sum(_manifest(f, p) == _manifest(f, p) for f, p in SUITES)
    ok = same == len(SUITES)
    record(9, ok, f"{same}/{len(SUITES)} manifests identical across repeated in-process runs")
    assert ok


def _cli_manifest(argv, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    out = subprocess.run([sys.executable, "-m", "exotic4.cli", "build", *argv],
                         capture_output=True, text=True, env=env, check=True).stdout
    lines = [ln for ln in out.splitlines() if '"seconds"' not in ln]
    return "\n".join(lines)


@pytest.mark.parametrize("argv", [["X", "--n", "2", "--k", "2"], ["Xfree", "--n", "2", "--k", "3"],
                                  ["X0", "--n", "1", "--k", "2"], ["Xm", "--n", "2", "--k", "1", "--m", "3"]])
def test_criterion_9_determinism_across_processes(argv):
    a, b = _cli_manifest(argv, 1), _cli_manifest(argv, 12345)
    ok = a == b
    record(9, ok, f"build {' '.join(argv)} identical under two hash seeds")
    assert ok
