"""The ten acceptance criteria, one test each.

Every test prints a single ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line (visible without ``-s``). Running this file directly prints the same lines.
Criterion 3 is expected to fail: see the README.
"""

import random
import time

import pytest

from superhopf.checks import (
    _alpha_iso,
    oracle_coproduct_samples,
    oracle_product_samples,
    normalize_m,
    representatives,
    run_suite,
    representative_independence,
)
from superhopf.combinat import dotted_compositions, global_descents, parse_index
from superhopf.hopf import abelianize, change_basis, coproduct
from superhopf.linear import Basis, LinearCombination, TensorCombination, basis_element
from superhopf.oracle import CMonomial, NCMonomial, qs_action, verify_coproduct, verify_product
from superhopf.posets import dotted_downset, fiber_bounds, sc_upset, weak_interval

P = parse_index


def el(basis, text):
    return basis_element(basis, P(text))


def lc(basis, terms):
    return LinearCombination(basis, {P(t): c for c, t in terms})


def tc(basis, terms):
    return TensorCombination(basis, {(P(a), P(b)): c for c, a, b in terms})


def diff(got, want) -> str:
    only_got = sorted(f"{c:+d}[{k}]" for k, c in got.terms.items() if want.terms.get(k) != c)
    only_want = sorted(f"{c:+d}[{k}]" for k, c in want.terms.items() if got.terms.get(k) != c)
    return (f"{len(got)} terms computed, {len(want)} expected; "
            f"computed {' '.join(only_got) or 'nothing'} where expected {' '.join(only_want) or 'nothing'}")


def criterion_1():
    start = time.perf_counter()
    got = el("Mnc", "{1,2}|{0}") * el("Mnc", "{0,2}|{1,3}")
    seconds = time.perf_counter() - start
    want = lc("Mnc", [
        (1, "{1,2}|{0}|{0,4}|{3,5}"), (-1, "{1,2}|{0,4}|{0}|{3,5}"), (-1, "{0,1,2,4}|{0}|{3,5}"),
        (-1, "{1,2}|{0,4}|{0,3,5}"), (-1, "{0,1,2,4}|{0,3,5}"), (-1, "{0,4}|{1,2}|{0}|{3,5}"),
        (-1, "{0,4}|{1,2}|{0,3,5}"), (-1, "{1,2}|{0,4}|{3,5}|{0}"), (-1, "{0,1,2,4}|{3,5}|{0}"),
        (-1, "{0,4}|{1,2}|{3,5}|{0}"), (-1, "{0,4}|{1,2,3,5}|{0}"), (-1, "{0,4}|{3,5}|{1,2}|{0}"),
    ])
    ok = got == want and seconds < 1
    return ok, f"M-product has {len(got)} terms, exact={got == want}, {seconds * 1000:.1f} ms"


def criterion_2():
    got = el("Q", "{0,2}|{0,1,3}") * el("Q", "{0,1,2}|{0}")
    want = lc("Q", [
        (1, "{0,2}|{0,1,3}|{0,4,5}|{0}"), (-1, "{0,2}|{0,4,5}|{0,1,3}|{0}"),
        (1, "{0,2}|{0,4,5}|{0}|{0,1,3}"), (1, "{0,4,5}|{0,2}|{0,1,3}|{0}"),
        (-1, "{0,4,5}|{0,2}|{0}|{0,1,3}"), (1, "{0,4,5}|{0}|{0,2}|{0,1,3}"),
    ])
    return got == want, f"Q-product has {len(got)} terms, exact={got == want}"


M_PRODUCT_NINE = [
    (1, "{0}|{0,3}|{0,5}|{1,2}|{4}"), (-1, "{0,3}|{0,4}|{0,5}|{1,2}"), (1, "{0}|{0,3,4}|{0,5}|{1,2}"),
    (1, "{0}|{0,3}|{0,5}|{1,2,4}"), (1, "{0}|{0,3}|{0,1,2,5}|{4}"), (-1, "{0,3}|{0,4}|{0,1,2,5}"),
    (1, "{0}|{0,3,4}|{0,1,2,5}"), (-1, "{0}|{0,5}|{0,3,4}|{1,2}"), (-1, "{0}|{0,5}|{0,1,2,3,4}"),
]


def criterion_3():
    conv = change_basis(el("m", "{0,2,4}|{0,3}|{1}"), "Mnc")
    conv_ok = conv == lc("Mnc", [
        (1, "{0,2,4}|{0,3}|{1}"), (1, "{0,2,4}|{1}|{0,3}"), (-1, "{0,3}|{0,2,4}|{1}"),
        (-1, "{0,3}|{1}|{0,2,4}"), (1, "{1}|{0,2,4}|{0,3}"), (-1, "{1}|{0,3}|{0,2,4}"),
    ])
    cop = coproduct(el("m", "{0,2,4}|{0,3}|{1}"))
    cop_ok = cop == tc("m", [
        (1, "e", "{0,2,4}|{0,3}|{1}"), (1, "{0,1,2}", "{0,2}|{1}"), (-1, "{0,1}", "{0,2,3}|{1}"),
        (1, "{1}", "{0,1,3}|{0,2}"), (1, "{0,1,3}|{0,2}", "{1}"), (1, "{0,2,3}|{1}", "{0,1}"),
        (-1, "{0,2}|{1}", "{0,1,2}"), (1, "{0,2,4}|{0,3}|{1}", "e"),
    ])
    # displayed terms are normalized to superpartition block order, with the matching sign
    prod = el("m", "{0}|{0,3}|{1,2}") * el("m", "{0,2}|{1}")
    want = normalize_m(M_PRODUCT_NINE)
    prod_ok = prod == want
    oracle_ok = verify_product("m", P("{0}|{0,3}|{1,2}"), P("{0,2}|{1}"), 5)
    detail = (f"m->M exact={conv_ok}, coproduct exact={cop_ok}, product exact={prod_ok} "
              f"(9 listed terms, {len(want)} after normalization; "
              f"{diff(prod, want)}; oracle agrees with computed product: {oracle_ok})")
    return conv_ok and cop_ok and prod_ok, detail


def criterion_4():
    conv = change_basis(el("MonF", "{1}|{0,2}|{3}"), "Q")
    conv_ok = conv == lc("Q", [
        (1, "{1}|{0,2}|{3}"), (-1, "{2}|{0,1}|{3}"), (-1, "{1}|{0,3}|{2}"), (1, "{3}|{0,2}|{1}")])
    I = P("{0,6}|{3}|{0,4,5}|{1}|{2}")
    cop = coproduct(basis_element("MonF", I))
    cop_ok = cop == tc("MonF", [
        (1, "e", "{0,6}|{3}|{0,4,5}|{1}|{2}"), (1, "{0,1}", "{3}|{0,4,5}|{1}|{2}"),
        (1, "{0,4}|{1}|{0,2,3}", "{1}|{2}"), (1, "{0,6}|{3}|{0,4,5}|{1}|{2}", "e"),
    ])
    gdes = global_descents(I)
    ok = conv_ok and cop_ok and gdes == [0, 1, 3, 5]
    return ok, f"MonF->Q exact={conv_ok}, coproduct exact={cop_ok}, global descents {gdes}"


def criterion_5():
    prod = el("L", "(2,.1)") * el("L", "(2)")
    listed = ["(2,.1,2)", "(2,.2,1)", "(2,.3)", "(3,.1,1)", "(3,.2)", "(2,1,.1,1)", "(2,1,.2)",
              "(1,2,.1,1)", "(1,2,.2)", "(4,.1)", "(3,1,.1)", "(1,3,.1)", "(1,2,1,.1)"]
    want = lc("L", [(1, t) for t in listed] + [(2, "(2,2,.1)")])
    prod_ok = prod == want and len(prod) == 14
    conv = change_basis(el("L", "(1,2,.0,1,.3,3)"), "Mc")
    conv_ok = conv == lc("Mc", [(1, t) for t in (
        "(1,2,.0,1,.3,3)", "(1,2,.0,1,.3,2,1)", "(1,2,.0,1,.3,1,2)", "(1,1,1,.0,1,.3,3)",
        "(1,2,.0,1,.3,1,1,1)", "(1,1,1,.0,1,.3,2,1)", "(1,1,1,.0,1,.3,1,2)", "(1,1,1,.0,1,.3,1,1,1)")])
    return prod_ok and conv_ok, (f"L-product has {len(prod)} distinct indices, "
                                 f"(2,2,.1) at {prod[P('(2,2,.1)')]}, exact={prod_ok}; L->Mc exact={conv_ok}")


def criterion_6():
    down = dotted_downset(P("(1,2,.0,1,.3,3)"))
    boolean = len(down) == 8 and {len(c) - 1 for c in down.maximal_chains()} == {3}
    upset8 = len(sc_upset(P("{10}|{3}|{4}|{0}|{9}|{0,1,5,7}|{2}|{6}|{8}"))) == 8
    iso_even = _alpha_iso(P("{1}|{2}|{4}|{3}")).endswith("; iso")
    iso_odd = _alpha_iso(P("{0}|{1}|{2}|{4}|{0,3}")).endswith("; iso")
    lo, hi = fiber_bounds(P("(1,.1,1)"))
    hexagon = weak_interval(lo, hi)
    hexagon_ok = (len(hexagon), len(hexagon.covers)) == (6, 6) and all(
        sum(1 for e in hexagon.covers if x in e) == 2 for x in hexagon.elements)
    flags = [boolean, upset8, iso_even, iso_odd, hexagon_ok]
    return all(flags), "downset, upset, two alpha isomorphisms, hexagon: " + " ".join("ok" if f else "MISMATCH" for f in flags)


def criterion_7():
    report = run_suite("hopf-axioms", max_size=4)
    ok = report.ok and report.seconds < 60
    return ok, f"{report.passed} checks passed, {report.failed} failed in {report.seconds:.1f} s"


def criterion_8():
    rng = random.Random(8)
    counts, bad = {}, []
    for basis in (Basis.M_nc, Basis.Q, Basis.m):
        pairs = oracle_product_samples(rng, basis, 200, max_vars=8)
        for I, J in pairs:
            if not verify_product(basis, I, J, len(I) + len(J)):
                bad.append(f"product {basis.value} {I} {J}")
            if basis is Basis.M_nc:
                x, y = basis_element(basis, I), basis_element(basis, J)
                if abelianize(x * y) != abelianize(x) * abelianize(y):
                    bad.append(f"pi {I} {J}")
        counts[basis.value] = len(pairs)
    for basis in (Basis.M_nc, Basis.Q, Basis.m, Basis.MonF):
        samples = oracle_coproduct_samples(rng, basis, 100, max_vars=4)
        for I in samples:
            if not verify_coproduct(basis, I, max(len(I), 1)):
                bad.append(f"coproduct {basis.value} {I}")
        counts[f"coproduct {basis.value}"] = len(samples)
    return not bad, f"samples {counts}; failures {bad[:3] or 'none'}"


def criterion_9():
    report = run_suite("actions", max_size=4)
    u = qs_action("commutative", [5, 3, 2], CMonomial((2, 5), ((3, 3), (4, 1), (5, 2), (7, 1))))
    v = qs_action("noncommutative", [4, 3, 6, 1], NCMonomial((2, 4), (3, 3, 2, 6, 3, 2, 6)))
    examples = str(u) == "t2 t6 x3^3 x4 x6^2 x7" and str(v) == "t1 t5 | x3 x3 x1 x7 x3 x1 x7"
    return report.ok and examples, f"action suite {report.passed} passed, {report.failed} failed; worked examples exact={examples}"


def criterion_10():
    alphas = [a for size in range(5) for a in dotted_compositions(size)]
    reps = {a: representatives(a, 3) for a in alphas}
    bad = [(a, b) for a in alphas for b in alphas if not representative_independence(a, b, reps=reps)]
    short = sum(1 for a in alphas if len(reps[a]) < 3)
    return not bad, (f"{len(alphas) ** 2} pairs of size <= 4 each, {short} fibers with fewer than 3 "
                     f"superpermutations (all used); failures {bad[:3] or 'none'}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(n: int, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    for n, check in enumerate(CRITERIA, 1):
        print(_line(n, *check()), flush=True)
