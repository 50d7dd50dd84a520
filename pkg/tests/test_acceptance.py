"""Acceptance suite: one test and one printed verdict line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
All arithmetic is exact, so every comparison is equality; the only
tolerances here are the stated step and time budgets.
"""

import random
import time
from itertools import product

from solvpoly import (DegreeFunction, GrLex, GRevLex, Lex, Polynomial, QQ,
                      ReesOrder, TypeVerdict, build_associated_graded,
                      build_rees, check_filtered_type, check_graded_type,
                      check_lm_transport, check_pbw_confluence, check_solvable,
                      deg_poly, dehomogenize, find_weights, format_algebra_file,
                      homogenize, homogenize_at, is_graded_wrt,
                      leading_homogeneous, make_graded, mono_mul, mul,
                      principal_symbol, project_mod_z, random_polynomial)
from solvpoly.cli import main

from conftest import W3_DEGREE, W3_ORDER, commutative3, weighted3

UNIT = DegreeFunction((1, 1, 1))
GRADED = weighted3(1, 1, {6: 1})
FILTERED = weighted3(1, 1, {5: 1})


def _report(criterion, description, ok):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {description}")
    assert ok, f"criterion {criterion} failed: {description}"


def test_criterion_01_graded_verdicts():
    ok = check_graded_type(GRADED, W3_DEGREE).verdict is TypeVerdict.GRADED
    ok &= check_filtered_type(GRADED, W3_DEGREE).verdict is TypeVerdict.GRADED

    graded_unit = check_graded_type(GRADED, UNIT)
    filtered_unit = check_filtered_type(GRADED, UNIT)
    for report in (graded_unit, filtered_unit):
        ok &= report.verdict is TypeVerdict.NEITHER
        witness = {w.monomial: w for w in report.witnesses}.get((0, 2, 1))
        ok &= witness is not None and witness.degree == 3 \
            and witness.required == 2
    _report(1, "graded/neither verdicts with the documented witness", ok)


def test_criterion_02_filtered_verdicts():
    ok = check_graded_type(FILTERED, W3_DEGREE).verdict is \
        TypeVerdict.FILTERED_ONLY
    rng = random.Random(2)
    tails = [{k: 1} for k in range(7)]
    tails += [{rng.randint(0, 6): rng.choice([1, -1, 2, QQ.ratio(1, 2)]),
               rng.randint(0, 6): rng.randint(1, 4)} for _ in range(20)]
    tails.append({})
    for f_terms in tails:
        verdict = check_filtered_type(weighted3(1, 1, f_terms),
                                      W3_DEGREE).verdict
        ok &= verdict is not TypeVerdict.NEITHER
    _report(2, "bounded spill terms always stay filtered", ok)


def test_criterion_03_weight_discovery():
    found = find_weights(GRADED, "graded")
    ok = found is not None and found.weights == (2, 1, 4)
    _report(3, "weight search returns exactly (2,1,4)", ok)


def test_criterion_04_solvable_and_confluent():
    ok = True
    for f_terms in ({6: 1}, {5: 1}, {0: 1, 3: -2, 6: QQ.ratio(2, 3)}, {}):
        for mu in (1, 0, QQ.ratio(1, 2)):
            pres = weighted3(1, mu, f_terms)
            ok &= check_solvable(pres, W3_ORDER).ok
            ok &= check_pbw_confluence(pres, W3_ORDER).ok
    _report(4, "solvability and confluence under the weighted composite "
               "ordering", ok)


def test_criterion_05_associativity_exhaustive():
    started = time.perf_counter()
    systems = [(commutative3(), GrLex((1, 1, 1), (0, 1, 2)), (2, 2, 2))]
    for source in (GRADED, FILTERED):
        systems.append((source, W3_ORDER, (2, 2, 2)))
        graded = build_associated_graded(source, W3_DEGREE, W3_ORDER)
        systems.append((graded.presentation, graded.ordering, (2, 2, 2)))
        rees = build_rees(source, W3_DEGREE, W3_ORDER)
        systems.append((rees.presentation, rees.ordering, (2, 2, 2, 2)))
    ok = True
    for pres, ordering, bounds in systems:
        ok &= pres.multiplier(ordering).check_associativity(bounds) is None
    elapsed = time.perf_counter() - started
    ok &= elapsed < 60.0
    _report(5, f"exhaustive associativity at box 2 on 7 presentations "
               f"({elapsed:.1f}s < 60s)", ok)


def test_criterion_06_degree_and_lift_laws():
    graded = build_associated_graded(FILTERED, W3_DEGREE, W3_ORDER)
    rees = build_rees(FILTERED, W3_DEGREE, W3_ORDER)
    gmul = graded.presentation.multiplier(graded.ordering)
    rmul = rees.presentation.multiplier(rees.ordering)
    amul = FILTERED.multiplier(W3_ORDER)
    rng = random.Random(6)
    ok = True
    for _ in range(1000):
        f = random_polynomial(rng, QQ, 3, max_terms=3, max_exp=2)
        g = random_polynomial(rng, QQ, 3, max_terms=3, max_exp=2)
        fg = amul.mul(f, g)
        lead = amul.mul(leading_homogeneous(W3_DEGREE, f),
                        leading_homogeneous(W3_DEGREE, g))
        if not lead.is_zero():
            ok &= deg_poly(W3_DEGREE, fg) == \
                deg_poly(W3_DEGREE, f) + deg_poly(W3_DEGREE, g)
        ok &= principal_symbol(fg, W3_DEGREE) == gmul.mul(
            principal_symbol(f, W3_DEGREE), principal_symbol(g, W3_DEGREE))
        ok &= homogenize(fg, W3_DEGREE) == rmul.mul(
            homogenize(f, W3_DEGREE), homogenize(g, W3_DEGREE))
        if not ok:
            break
    rng2 = random.Random(66)
    for _ in range(200):
        f = random_polynomial(rng2, QQ, 3, max_terms=3, max_exp=2)
        p = deg_poly(W3_DEGREE, f)
        lift = homogenize(f, W3_DEGREE)
        z = Polynomial.monomial(QQ, (0, 0, 0, 1))
        shifted = lift
        for level in range(p, p + 4):
            ok &= homogenize_at(f, W3_DEGREE, level) == shifted
            shifted = rmul.mul(shifted, z)
        if not ok:
            break
    _report(6, "degree additivity plus symbol/lift multiplicativity and "
               "level shifts on 1000 sampled pairs", ok)


def test_criterion_07_transform_closure():
    ok = True
    for source in (GRADED, FILTERED):
        for result, bounds in (
                (build_associated_graded(source, W3_DEGREE, W3_ORDER),
                 (2, 2, 2)),
                (build_rees(source, W3_DEGREE, W3_ORDER), (2, 2, 2, 2))):
            pres = result.presentation
            ok &= check_solvable(pres, result.ordering).ok
            ok &= check_graded_type(pres, result.degree).verdict is \
                TypeVerdict.GRADED
            ok &= check_pbw_confluence(pres, result.ordering).ok
            if pres.n == 4:
                mult = pres.multiplier(result.ordering)
                for m in product(range(3), repeat=4):
                    for zexp in (1, 2):
                        zk = (0, 0, 0, zexp)
                        ok &= mult.mul_monomials(tuple(m), zk) == \
                            mult.mul_monomials(zk, tuple(m))
    _report(7, "graded and Rees outputs re-verify; central generator "
               "commutes exhaustively at box 2", ok)


def test_criterion_08_transport_laws():
    rng = random.Random(8)
    ok = True
    for _ in range(500):
        f = random_polynomial(rng, QQ, 3, max_terms=4, max_exp=3)
        ok &= check_lm_transport(FILTERED, W3_DEGREE, W3_ORDER, f).ok
        if not ok:
            break
    _report(8, "all five degree/leading-monomial transport laws on 500 "
               "sampled elements", ok)


def test_criterion_09_quotient_round_trips():
    rees = build_rees(FILTERED, W3_DEGREE, W3_ORDER)
    graded = build_associated_graded(FILTERED, W3_DEGREE, W3_ORDER)
    rmul = rees.presentation.multiplier(rees.ordering)
    gmul = graded.presentation.multiplier(graded.ordering)
    amul = FILTERED.multiplier(W3_ORDER)
    rng = random.Random(9)
    ok = True
    for _ in range(500):
        f = random_polynomial(rng, QQ, 3, max_terms=4, max_exp=3)
        ok &= dehomogenize(homogenize(f, W3_DEGREE)) == f
        ok &= project_mod_z(homogenize(f, W3_DEGREE)) == \
            principal_symbol(f, W3_DEGREE)
        if not ok:
            break
    for _ in range(500):
        h1 = random_polynomial(rng, QQ, 4, max_terms=3, max_exp=2)
        h2 = random_polynomial(rng, QQ, 4, max_terms=3, max_exp=2)
        lifted_product = rmul.mul(h1, h2)
        ok &= dehomogenize(lifted_product) == \
            amul.mul(dehomogenize(h1), dehomogenize(h2))
        ok &= project_mod_z(lifted_product) == \
            gmul.mul(project_mod_z(h1), project_mod_z(h2))
        if not ok:
            break
    _report(9, "substitution and projection are ring maps; round trips "
               "hold on 500 samples each", ok)


def test_criterion_10_ordering_axioms():
    kinds = [
        Lex((0, 1, 2)),
        GrLex((1, 1, 1), (0, 1, 2)),
        GRevLex((2, 1, 3), (1, 0, 2)),
        make_graded(Lex((0, 1, 2)), W3_DEGREE),
        ReesOrder(base=make_graded(Lex((0, 1)), DegreeFunction((2, 1)))),
    ]
    rng = random.Random(10)
    ok = True
    for ordering in kinds:
        monos = [tuple(m) for m in product(range(4), repeat=ordering.n)]
        ranked = sorted(monos, key=ordering.key)
        rank = {m: k for k, m in enumerate(ranked)}
        # pairwise consistency with a strict total rank implies totality,
        # antisymmetry and transitivity over every triple in the box
        for a in monos:
            for b in monos:
                verdict = ordering.compare(a, b)
                expected = (rank[a] > rank[b]) - (rank[a] < rank[b])
                ok &= verdict == expected
                ok &= (verdict == 0) == (a == b)
        for _ in range(10_000):
            a = tuple(rng.randint(0, 4) for _ in range(ordering.n))
            b = tuple(rng.randint(0, 4) for _ in range(ordering.n))
            c = tuple(rng.randint(0, 4) for _ in range(ordering.n))
            ok &= ordering.compare(mono_mul(a, c), mono_mul(b, c)) == \
                ordering.compare(a, b)
    ok &= is_graded_wrt(make_graded(Lex((0, 1, 2)), W3_DEGREE), W3_DEGREE, 3).ok
    ok &= is_graded_wrt(GrLex((1, 1, 1), (0, 1, 2)), UNIT, 3).ok
    refutation = is_graded_wrt(Lex((0, 1)), DegreeFunction((1, 1)), 5)
    ok &= not refutation.ok and refutation.witness == ((0, 5), (1, 0), 5, 1)
    _report(10, "ordering axioms exhaustive at box 3, multiplicativity on "
                "10^4 triples, degree-compatibility verdicts", ok)


def test_criterion_11_cli_round_trip(tmp_path, capsys):
    def run(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        return code, out

    source = tmp_path / "filtered.alg"
    source.write_text(
        "field Q\n"
        "gens a1:2 a2:1 a3:4\n"
        "order gr(lex(a1>a2>a3))\n"
        "rel a3*a1 = a1*a3 + a2^2*a3 + a2^5\n", encoding="utf-8")
    ok = True
    for sub in ("gr", "rees"):
        code, text = run(sub, str(source))
        ok &= code == 0
        emitted = tmp_path / f"{sub}.alg"
        emitted.write_text(text, encoding="utf-8")
        for check in ("solvcheck", "gradecheck", "confluence"):
            code, _ = run(check, str(emitted))
            ok &= code == 0
        code, text2 = run(sub, str(source))
        ok &= text2 == text

    from test_cli import GRADED_TEXT, FILTERED_TEXT  # reuse the corpus seeds
    from solvpoly import parse_algebra_file

    corpus = [GRADED_TEXT, FILTERED_TEXT]
    rng = random.Random(11)
    while len(corpus) < 20:
        k = len(corpus)
        q = rng.randint(2, 9)
        corpus.append(
            f"field GF(11)\ngens x y\norder grlex(1,{k % 3 + 1}; x>y)\n"
            f"rel y*x = {q}*x*y + {k % 4}\n" if k % 2 else
            f"gens p q r\norder grevlex(1,2,1; r>q>p)\n"
            f"rel r*p = {k + 1}*p*r + q^2\n")
    for idx, text in enumerate(corpus):
        pres, ordering, degree = parse_algebra_file(text)
        printed = format_algebra_file(pres, ordering, degree)
        reparsed = parse_algebra_file(printed)
        ok &= reparsed == (pres, ordering, degree)
    _report(11, "transform outputs re-verify through the CLI; parse/print "
                "identity on a 20-file corpus", ok)
