"""Verification suites: golden examples, Hopf axioms, oracle equivalence,
quasisymmetrizing actions and poset structure.

Each suite is a generator of ``(label, ok)`` pairs; :func:`run_suite`
tallies them and keeps the first failing label as the counterexample.
"""

from __future__ import annotations

import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .combinat import (
    DottedComposition,
    SetSupercomposition,
    alpha_of,
    bidegree,
    dotted_compositions,
    gamma_of,
    global_descents,
    is_superpermutation,
    lift,
    parse_index,
    set_superpartitions,
    set_supercompositions,
    standardize,
    superpartition_sort,
    superpermutations,
    w_of,
)
from .hopf import (
    abelianize,
    antipode,
    apply_to_factor,
    change_basis,
    coproduct,
    multiply,
    product_L,
    quasi_shuffles,
    super_shuffles,
    super_tensor_mul,
)
from .linear import Basis, LinearCombination, TensorCombination, basis_element, unit
from .oracle import (
    CMonomial,
    NCMonomial,
    SuperPoly,
    check_invariance,
    expand,
    monomial_from_set,
    permute_set,
    qs_action,
    std_and_I,
    verify_abelianization,
    verify_coproduct,
    verify_product,
)
from .posets import (
    dotted_downset,
    dotted_leq,
    fiber_bounds,
    interval_from_relation,
    mobius_weak,
    sc_leq,
    sc_upset,
    weak_fiber,
    weak_interval,
    weak_leq,
)

__all__ = ["SUITES", "SuiteReport", "run_suite", "all_indices", "GOLDEN", "normalize_m", "representative_independence"]

Check = Iterator[tuple[str, bool]]

NC_BASES = (Basis.M_nc, Basis.Q, Basis.m, Basis.MonF)


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: Optional[str] = None
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        head = f"{self.name}: {self.passed} passed, {self.failed} failed"
        if self.ok:
            return head + " -- all checks passed"
        return head + f"\nfirst counterexample: {self.first_failure}"


# ---------------------------------------------------------------------------
# index enumeration and sampling


def all_indices(basis: Basis, max_size: int, min_size: int = 0) -> list:
    """Every index of ``basis`` with size ``n + m`` in ``[min_size, max_size]``."""
    out = []
    for size in range(min_size, max_size + 1):
        if basis.commutative:
            out.extend(dotted_compositions(size))
            continue
        for m in range(size + 1):
            n = size - m
            if basis in (Basis.M_nc, Basis.Q):
                out.extend(set_supercompositions(n, m))
            elif basis is Basis.m:
                out.extend(set_superpartitions(n, m))
            else:
                out.extend(superpermutations(n, m))
    return sorted(out, key=lambda x: (x.size, str(x)))


def _pairs(rng: random.Random, basis: Basis, total: int, count: int, arity: int = 2) -> list:
    """``count`` random tuples of nonempty indices whose sizes add up to at most ``total``."""
    pool = all_indices(basis, total - (arity - 1), 1)
    out = []
    while len(out) < count:
        pick = tuple(rng.choice(pool) for _ in range(arity))
        if sum(x.size for x in pick) <= total:
            out.append(pick)
    return out


def _b(basis: Basis, index) -> LinearCombination:
    return basis_element(basis, index)


# ---------------------------------------------------------------------------
# golden examples, transcribed term by term


def normalize_m(terms) -> LinearCombination:
    """m-basis combination from indices that may not be in superpartition order.

    Reordering blocks multiplies by the sign of the induced permutation of the
    fermionic blocks.
    """
    acc: dict = defaultdict(int)
    for c, text in terms:
        I = parse_index(text)
        P, perm = superpartition_sort(I)
        ferm = [p for p in perm if 0 in I.blocks[p]]
        inv = sum(1 for a in range(len(ferm)) for b in range(a + 1, len(ferm)) if ferm[a] > ferm[b])
        acc[P] += c * (-1) ** inv
    return LinearCombination(Basis.m, acc)


def _lc(basis, terms) -> LinearCombination:
    acc: dict = defaultdict(int)
    for c, text in terms:
        acc[parse_index(text)] += c
    return LinearCombination(basis, acc)


def _tc(basis, terms) -> TensorCombination:
    acc: dict = defaultdict(int)
    for c, a, b in terms:
        acc[(parse_index(a), parse_index(b))] += c
    return TensorCombination(basis, acc)


def _P(text):
    return parse_index(text)


@dataclass(frozen=True)
class Golden:
    label: str
    compute: Callable[[], str]
    expected: Callable[[], str]


def _golden() -> list[Golden]:
    g = []

    def add(label, compute, expected):
        g.append(Golden(label, compute, expected))

    add("M-product {1,2}|{0} * {0,2}|{1,3}",
        lambda: (_b(Basis.M_nc, _P("{1,2}|{0}")) * _b(Basis.M_nc, _P("{0,2}|{1,3}"))).to_text(),
        lambda: _lc(Basis.M_nc, [
            (1, "{1,2}|{0}|{0,4}|{3,5}"), (-1, "{1,2}|{0,4}|{0}|{3,5}"), (-1, "{0,1,2,4}|{0}|{3,5}"),
            (-1, "{1,2}|{0,4}|{0,3,5}"), (-1, "{0,1,2,4}|{0,3,5}"), (-1, "{0,4}|{1,2}|{0}|{3,5}"),
            (-1, "{0,4}|{1,2}|{0,3,5}"), (-1, "{1,2}|{0,4}|{3,5}|{0}"), (-1, "{0,1,2,4}|{3,5}|{0}"),
            (-1, "{0,4}|{1,2}|{3,5}|{0}"), (-1, "{0,4}|{1,2,3,5}|{0}"), (-1, "{0,4}|{3,5}|{1,2}|{0}"),
        ]).to_text())
    add("Q-product {0,2}|{0,1,3} * {0,1,2}|{0}",
        lambda: (_b(Basis.Q, _P("{0,2}|{0,1,3}")) * _b(Basis.Q, _P("{0,1,2}|{0}"))).to_text(),
        lambda: _lc(Basis.Q, [
            (1, "{0,2}|{0,1,3}|{0,4,5}|{0}"), (-1, "{0,2}|{0,4,5}|{0,1,3}|{0}"),
            (1, "{0,2}|{0,4,5}|{0}|{0,1,3}"), (1, "{0,4,5}|{0,2}|{0,1,3}|{0}"),
            (-1, "{0,4,5}|{0,2}|{0}|{0,1,3}"), (1, "{0,4,5}|{0}|{0,2}|{0,1,3}"),
        ]).to_text())
    add("m {0,2,4}|{0,3}|{1} in the M basis",
        lambda: change_basis(_b(Basis.m, _P("{0,2,4}|{0,3}|{1}")), Basis.M_nc).to_text(),
        lambda: _lc(Basis.M_nc, [
            (1, "{0,2,4}|{0,3}|{1}"), (1, "{0,2,4}|{1}|{0,3}"), (-1, "{0,3}|{0,2,4}|{1}"),
            (-1, "{0,3}|{1}|{0,2,4}"), (1, "{1}|{0,2,4}|{0,3}"), (-1, "{1}|{0,3}|{0,2,4}"),
        ]).to_text())
    add("m-product {0}|{0,3}|{1,2} * {0,2}|{1} (nine displayed terms)",
        lambda: (_b(Basis.m, _P("{0}|{0,3}|{1,2}")) * _b(Basis.m, _P("{0,2}|{1}"))).to_text(),
        lambda: normalize_m(M_PRODUCT_DISPLAY).to_text())
    add("coproduct of m {0,2,4}|{0,3}|{1}",
        lambda: coproduct(_b(Basis.m, _P("{0,2,4}|{0,3}|{1}"))).to_text(),
        lambda: _tc(Basis.m, [
            (1, "e", "{0,2,4}|{0,3}|{1}"), (1, "{0,1,2}", "{0,2}|{1}"), (-1, "{0,1}", "{0,2,3}|{1}"),
            (1, "{1}", "{0,1,3}|{0,2}"), (1, "{0,1,3}|{0,2}", "{1}"), (1, "{0,2,3}|{1}", "{0,1}"),
            (-1, "{0,2}|{1}", "{0,1,2}"), (1, "{0,2,4}|{0,3}|{1}", "e"),
        ]).to_text())
    add("MonF {1}|{0,2}|{3} in the Q basis",
        lambda: change_basis(_b(Basis.MonF, _P("{1}|{0,2}|{3}")), Basis.Q).to_text(),
        lambda: _lc(Basis.Q, [
            (1, "{1}|{0,2}|{3}"), (-1, "{2}|{0,1}|{3}"), (-1, "{1}|{0,3}|{2}"), (1, "{3}|{0,2}|{1}"),
        ]).to_text())
    add("coproduct of MonF {0,6}|{3}|{0,4,5}|{1}|{2}",
        lambda: coproduct(_b(Basis.MonF, _P("{0,6}|{3}|{0,4,5}|{1}|{2}"))).to_text(),
        lambda: _tc(Basis.MonF, [
            (1, "e", "{0,6}|{3}|{0,4,5}|{1}|{2}"), (1, "{0,1}", "{3}|{0,4,5}|{1}|{2}"),
            (1, "{0,4}|{1}|{0,2,3}", "{1}|{2}"), (1, "{0,6}|{3}|{0,4,5}|{1}|{2}", "e"),
        ]).to_text())
    add("global descents of {0,6}|{3}|{0,4,5}|{1}|{2}",
        lambda: str(global_descents(_P("{0,6}|{3}|{0,4,5}|{1}|{2}"))),
        lambda: "[0, 1, 3, 5]")
    add("L-product (2,.1) * (2)",
        lambda: (_b(Basis.L, _P("(2,.1)")) * _b(Basis.L, _P("(2)"))).to_text(),
        lambda: _lc(Basis.L, [(1, t) for t in (
            "(2,.1,2)", "(2,.2,1)", "(2,.3)", "(3,.1,1)", "(3,.2)", "(2,1,.1,1)", "(2,1,.2)",
            "(1,2,.1,1)", "(1,2,.2)", "(4,.1)", "(2,2,.1)", "(3,1,.1)", "(1,3,.1)", "(1,2,1,.1)",
            "(2,2,.1)")]).to_text())
    add("L (1,2,.0,1,.3,3) in the Mc basis",
        lambda: change_basis(_b(Basis.L, _P("(1,2,.0,1,.3,3)")), Basis.M_c).to_text(),
        lambda: _lc(Basis.M_c, [(1, t) for t in (
            "(1,2,.0,1,.3,3)", "(1,2,.0,1,.3,2,1)", "(1,2,.0,1,.3,1,2)", "(1,1,1,.0,1,.3,3)",
            "(1,2,.0,1,.3,1,1,1)", "(1,1,1,.0,1,.3,2,1)", "(1,1,1,.0,1,.3,1,2)",
            "(1,1,1,.0,1,.3,1,1,1)")]).to_text())
    add("shuffles of {0}|{0,1} and {0,1,3}|{2}",
        lambda: "\n".join(sorted(str(K) for K, _ in quasi_shuffles(_P("{0}|{0,1}"), _P("{0,1,3}|{2}"))
                                 if len(K) == 4)),
        lambda: "\n".join(sorted([
            "{0}|{0,1}|{0,2,4}|{3}", "{0}|{0,2,4}|{0,1}|{3}", "{0,2,4}|{0}|{0,1}|{3}",
            "{0}|{0,2,4}|{3}|{0,1}", "{0,2,4}|{0}|{3}|{0,1}", "{0,2,4}|{3}|{0}|{0,1}"])))
    add("sign-one super-shuffles of {2,4}|{0,1}|{3}|{5} and {1}|{0}",
        lambda: str(all(
            (_P(t), 1) in super_shuffles(_P("{2,4}|{0,1}|{3}|{5}"), _P("{1}|{0}")) for t in (
                "{2,4}|{0,1}|{6}|{3}|{5}|{0}", "{2,4}|{0,1,6}|{3}|{5}|{0}", "{2,4}|{0,1}|{6}|{3}|{0,5}",
                "{2,4}|{0,1}|{6}|{0,3,5}", "{2,4}|{0,1,6}|{3}|{0,5}", "{2,4}|{0,1,6}|{0,3,5}"))),
        lambda: "True")
    add("bidegree of {0,1,3}|{4}|{0}|{0,2}",
        lambda: str(tuple(bidegree(_P("{0,1,3}|{4}|{0}|{0,2}")))),
        lambda: "(4, 3)")
    add("alpha of {0}|{3,5}|{0,2,4}|{0,1}",
        lambda: str(alpha_of(_P("{0}|{3,5}|{0,2,4}|{0,1}"))), lambda: "(.0,2,.2,.1)")
    add("gamma of {0,4,8}|{2}|{5}|{3}|{0}|{6}|{1}|{7}",
        lambda: str(gamma_of(_P("{0,4,8}|{2}|{5}|{3}|{0}|{6}|{1}|{7}"))), lambda: "(.2,2,1,.0,1,2)")
    add("word of {3}|{0,1,5}|{4}|{0}|{2}",
        lambda: " ".join(map(str, w_of(_P("{3}|{0,1,5}|{4}|{0}|{2}")))), lambda: "3 1 5 4 2")
    add("standardization of {0,6}|{3}|{0,4,5}",
        lambda: str(standardize([{0, 6}, {3}, {0, 4, 5}])), lambda: "{0,4}|{1}|{0,2,3}")
    add("std and I of t2 t8 | x7 x2 x7 x5 x9 x2 x5 x7",
        lambda: "; ".join(map(str, std_and_I(NCMonomial((2, 8), (7, 2, 7, 5, 9, 2, 5, 7))))),
        lambda: "t1 t4 | x3 x1 x3 x2 x5 x1 x2 x3; {0,2,6}|{4,7}|{1,3,8}|{0}|{5}")
    add("commutative action s5 s3 s2",
        lambda: str(qs_action("commutative", [5, 3, 2], CMonomial((2, 5), ((3, 3), (4, 1), (5, 2), (7, 1))))),
        lambda: "t2 t6 x3^3 x4 x6^2 x7")
    add("noncommutative action s4 s3 s6 s1",
        lambda: str(qs_action("noncommutative", [4, 3, 6, 1], NCMonomial((2, 4), (3, 3, 2, 6, 3, 2, 6)))),
        lambda: "t1 t5 | x3 x3 x1 x7 x3 x1 x7")
    add("expansion of M {2,4}|{0,1,5}|{0,3} contains the displayed monomials",
        lambda: str([expand(Basis.M_nc, _P("{2,4}|{0,1,5}|{0,3}"), 4).terms.get(u) for u in (
            NCMonomial((2, 3), (2, 1, 3, 1, 2)), NCMonomial((2, 4), (2, 1, 4, 1, 2)))]),
        lambda: "[1, 1]")
    add("downset of (1,2,.0,1,.3,3)",
        lambda: _shape(dotted_downset(_P("(1,2,.0,1,.3,3)"))), lambda: "8 elements, chains of length 3")
    add("upset of {10}|{3}|{4}|{0}|{9}|{0,1,5,7}|{2}|{6}|{8}",
        lambda: _shape(sc_upset(_P("{10}|{3}|{4}|{0}|{9}|{0,1,5,7}|{2}|{6}|{8}"))),
        lambda: "8 elements, chains of length 3")
    add("alpha on the upset of {1}|{2}|{4}|{3}",
        lambda: _alpha_iso(_P("{1}|{2}|{4}|{3}")), lambda: "(1,1,1,1) (1,2,1) (2,1,1) (3,1); iso")
    add("alpha on the upset of {0}|{1}|{2}|{4}|{0,3}",
        lambda: _alpha_iso(_P("{0}|{1}|{2}|{4}|{0,3}")),
        lambda: "(.0,1,1,1,.1) (.0,1,2,.1) (.0,2,1,.1) (.0,3,.1); iso")
    add("fiber over (1,.1,1)",
        lambda: _hexagon(), lambda: "{1}|{0,2}|{3} .. {3}|{0,2}|{1}: 6 elements, 6 covers")
    return g


M_PRODUCT_DISPLAY = [
    (1, "{0}|{0,3}|{0,5}|{1,2}|{4}"), (-1, "{0,3}|{0,4}|{0,5}|{1,2}"), (1, "{0}|{0,3,4}|{0,5}|{1,2}"),
    (1, "{0}|{0,3}|{0,5}|{1,2,4}"), (1, "{0}|{0,3}|{0,1,2,5}|{4}"), (-1, "{0,3}|{0,4}|{0,1,2,5}"),
    (1, "{0}|{0,3,4}|{0,1,2,5}"), (-1, "{0}|{0,5}|{0,3,4}|{1,2}"), (-1, "{0}|{0,5}|{0,1,2,3,4}"),
]


def _shape(P) -> str:
    lengths = {len(c) - 1 for c in P.maximal_chains()}
    return f"{len(P)} elements, chains of length {','.join(map(str, sorted(lengths)))}"


def _alpha_iso(I: SetSupercomposition) -> str:
    up = sc_upset(I)
    down = dotted_downset(gamma_of(I))
    images = {J: alpha_of(J) for J in up.elements}
    bij = sorted(map(str, images.values())) == sorted(map(str, down.elements)) and len(set(images.values())) == len(up)
    # both orders put the coarser object on top
    iso = bij and all(
        sc_leq(a, b) == dotted_leq(images[a], images[b]) for a in up.elements for b in up.elements
    )
    return " ".join(sorted(map(str, images.values()))) + ("; iso" if iso else "; not iso")


def _hexagon() -> str:
    lo, hi = fiber_bounds(_P("(1,.1,1)"))
    P = weak_interval(lo, hi)
    return f"{lo} .. {hi}: {len(P)} elements, {len(P.covers)} covers"


GOLDEN = _golden()


def suite_paper_examples(max_size: int = 4, seed: int = 0) -> Check:
    for item in GOLDEN:
        try:
            got, want = item.compute(), item.expected()
        except Exception as exc:  # report, don't abort the suite
            yield f"{item.label}: raised {exc!r}", False
            continue
        yield (item.label if got == want else f"{item.label}:\n--- got\n{got}\n--- expected\n{want}"), got == want


# ---------------------------------------------------------------------------
# Hopf axioms


def _tensor_id_counit(t: TensorCombination, side: int) -> LinearCombination:
    acc: dict = defaultdict(int)
    empty = t.basis.empty_index()
    for (a, b), c in t.terms.items():
        if side == 0 and a == empty:
            acc[b] += c
        if side == 1 and b == empty:
            acc[a] += c
    return LinearCombination(t.basis, acc, check=False)


def _mult_S(t: TensorCombination, side: int) -> LinearCombination:
    total = LinearCombination(t.basis)
    for (a, b), c in t.terms.items():
        x, y = _b(t.basis, a), _b(t.basis, b)
        if side == 0:
            x = antipode(x)
        else:
            y = antipode(y)
        total = total + multiply(x, y).scale(c)
    return total


def unary_axioms(basis: Basis, I) -> Check:
    x = _b(basis, I)
    d = coproduct(x)
    yield f"coassociativity {basis.value}[{I}]", apply_to_factor(d, 0) == apply_to_factor(d, 1)
    yield f"left counit {basis.value}[{I}]", _tensor_id_counit(d, 0) == x
    yield f"right counit {basis.value}[{I}]", _tensor_id_counit(d, 1) == x
    eta_eps = unit(basis).scale(x.counit())
    yield f"antipode m(S#id)D {basis.value}[{I}]", _mult_S(d, 0) == eta_eps
    yield f"antipode m(id#S)D {basis.value}[{I}]", _mult_S(d, 1) == eta_eps


def compatibility(basis: Basis, I, J) -> bool:
    a, b = _b(basis, I), _b(basis, J)
    return coproduct(multiply(a, b)) == super_tensor_mul(coproduct(a), coproduct(b))


def graded(basis: Basis, I, J) -> bool:
    n, m = I.n + J.n, I.m + J.m
    return all(K.n == n and K.m == m for K in multiply(_b(basis, I), _b(basis, J)).terms)


def _gamma_fiber(alpha: DottedComposition) -> list:
    n, m = alpha.n, alpha.m
    return sorted((I for I in superpermutations(n, m) if gamma_of(I) == alpha), key=str)


def representatives(alpha: DottedComposition, count: int = 3) -> list:
    """``lift(alpha)`` plus up to ``count - 1`` other superpermutations with the same gamma image."""
    first = lift(alpha)
    rest = [I for I in _gamma_fiber(alpha) if I != first]
    return [first] + rest[: count - 1]


def representative_independence(alpha: DottedComposition, beta: DottedComposition, count: int = 3,
               reps: Optional[dict] = None) -> bool:
    """``product_L`` does not depend on the chosen representatives.

    ``reps`` may map dotted compositions to precomputed representative lists.
    """
    ra = reps[alpha] if reps else representatives(alpha, count)
    rb = reps[beta] if reps else representatives(beta, count)
    ref = product_L(alpha, beta)
    return all(product_L(alpha, beta, I, J) == ref for I in ra for J in rb)


def suite_hopf_axioms(max_size: int = 4, seed: int = 0) -> Check:
    rng = random.Random(seed)
    for basis in NC_BASES:
        for I in all_indices(basis, max_size):
            yield from unary_axioms(basis, I)
    for basis in NC_BASES:
        for I, J in _pairs(rng, basis, max_size + 1, 40):
            yield f"compatibility {basis.value}[{I}] {basis.value}[{J}]", compatibility(basis, I, J)
            yield f"grading {basis.value}[{I}] {basis.value}[{J}]", graded(basis, I, J)
    for basis in NC_BASES + (Basis.L, Basis.M_c):
        for I, J, K in _pairs(rng, basis, max_size + 1, 30, 3):
            a, b, c = _b(basis, I), _b(basis, J), _b(basis, K)
            yield f"associativity {basis.value}[{I}] [{J}] [{K}]", (a * b) * c == a * (b * c)
    for I in all_indices(Basis.M_nc, max_size):
        x = _b(Basis.M_nc, I)
        yield f"M->Q->M [{I}]", change_basis(change_basis(x, Basis.Q), Basis.M_nc) == x
    for I in all_indices(Basis.MonF, max_size):
        q = _b(Basis.Q, I)
        yield f"Q->MonF->Q [{I}]", change_basis(change_basis(q, Basis.MonF), Basis.Q) == q
        closure = all(is_superpermutation(a) and is_superpermutation(b) for a, b in coproduct(q).terms)
        yield f"coproduct closure Q[{I}]", closure
    for I, J in _pairs(rng, Basis.MonF, max_size, 40):
        prod = _b(Basis.Q, I) * _b(Basis.Q, J)
        yield f"product closure Q[{I}] Q[{J}]", all(is_superpermutation(K) for K in prod.terms)
    for I, J in _pairs(rng, Basis.M_nc, max_size + 1, 40):
        x, y = _b(Basis.M_nc, I), _b(Basis.M_nc, J)
        yield f"pi homomorphism M[{I}] M[{J}]", abelianize(x * y) == abelianize(x) * abelianize(y)
    for I, J in _pairs(rng, Basis.MonF, max_size + 1, 40):
        x, y = _b(Basis.Q, I), _b(Basis.Q, J)
        yield f"pi homomorphism Q[{I}] Q[{J}]", abelianize(x * y) == abelianize(x) * abelianize(y)
    for size in range(max_size + 1):
        for a_size in range(size + 1):
            for alpha in dotted_compositions(a_size):
                for beta in dotted_compositions(size - a_size):
                    yield f"representative independence L{alpha} L{beta}", representative_independence(alpha, beta)


# ---------------------------------------------------------------------------
# oracle equivalence


# largest index size sampled per basis; m and MonF expansions grow much faster
ORACLE_POOL = {Basis.M_nc: 4, Basis.Q: 4, Basis.m: 3, Basis.MonF: 3, Basis.M_c: 3, Basis.L: 3}
ORACLE_TOTAL = {Basis.MonF: 5}


def oracle_product_samples(rng: random.Random, basis: Basis, count: int, max_vars: int = 8) -> list:
    """Random pairs of nonempty indices whose combined block count is at most ``max_vars``."""
    pool = all_indices(basis, ORACLE_POOL[basis], 1)
    out = []
    while len(out) < count:
        I, J = rng.choice(pool), rng.choice(pool)
        if len(I) + len(J) <= max_vars and I.size + J.size <= ORACLE_TOTAL.get(basis, 8):
            out.append((I, J))
    return out


def oracle_coproduct_samples(rng: random.Random, basis: Basis, count: int, max_vars: int = 4) -> list:
    pool = [I for I in all_indices(basis, ORACLE_POOL[basis]) if len(I) <= max_vars]
    return [rng.choice(pool) for _ in range(count)]


def suite_oracle_products(max_size: int = 4, seed: int = 0, samples: int = 40) -> Check:
    rng = random.Random(seed)
    for basis in (Basis.M_nc, Basis.Q, Basis.m, Basis.MonF, Basis.M_c, Basis.L):
        for I, J in oracle_product_samples(rng, basis, samples):
            N = len(I) + len(J)
            yield f"product {basis.value}[{I}] {basis.value}[{J}] N={N}", verify_product(basis, I, J, N)
            if basis is Basis.M_nc:
                x, y = _b(basis, I), _b(basis, J)
                yield f"pi homomorphism M[{I}] M[{J}]", abelianize(x * y) == abelianize(x) * abelianize(y)
    for basis in NC_BASES:
        for I in oracle_coproduct_samples(rng, basis, samples // 2):
            N = max(len(I), 1)
            yield f"coproduct {basis.value}[{I}] N={N}", verify_coproduct(basis, I, N)
    for I in all_indices(Basis.M_nc, min(max_size, 3)):
        yield f"commutative image of M[{I}]", verify_abelianization(I, max(len(I), 1) + 1)


# ---------------------------------------------------------------------------
# actions


def random_nc_monomial(rng: random.Random, N: int, length: int = 5, thetas: int = 2) -> NCMonomial:
    th = tuple(sorted(rng.sample(range(1, N + 1), min(thetas, N))))
    return NCMonomial(th, tuple(rng.randint(1, N) for _ in range(length)))


def random_c_monomial(rng: random.Random, N: int, thetas: int = 2) -> CMonomial:
    th = tuple(sorted(rng.sample(range(1, N + 1), min(thetas, N))))
    exps = tuple((i, e) for i in range(1, N + 1) if (e := rng.choice((0, 0, 1, 2))))
    return CMonomial(th, exps)


def suite_actions(max_size: int = 4, seed: int = 0, samples: int = 60) -> Check:
    rng = random.Random(seed)
    N = 8
    for variant, sampler in (("commutative", random_c_monomial), ("noncommutative", random_nc_monomial)):
        for _ in range(samples):
            u = sampler(rng, N - 2)
            i = rng.randint(1, N - 3)
            j = rng.randint(1, N - 3)
            yield f"{variant} s{i}^2 on {u}", qs_action(variant, [i, i], u) == u
            if abs(i - j) >= 2:
                yield f"{variant} s{i}s{j}=s{j}s{i} on {u}", qs_action(variant, [i, j], u) == qs_action(variant, [j, i], u)
            yield (f"{variant} braid at {i} on {u}",
                   qs_action(variant, [i, i + 1, i], u) == qs_action(variant, [i + 1, i, i + 1], u))
    for _ in range(samples):
        sigma = [rng.randint(1, N - 1) for _ in range(rng.randint(0, 6))]
        alpha = rng.choice(all_indices(Basis.M_c, 4, 1))
        A = sorted(rng.sample(range(1, 5), len(alpha)))
        lhs = qs_action("commutative", sigma, monomial_from_set(A, alpha))
        yield f"orbit formula {sigma} {A} {alpha}", lhs == monomial_from_set(permute_set(sigma, A), alpha)
        I = rng.choice(all_indices(Basis.M_nc, 4, 1))
        A = sorted(rng.sample(range(1, 5), len(I)))
        lhs = qs_action("noncommutative", sigma, monomial_from_set(A, I))
        yield f"orbit formula {sigma} {A} {I}", lhs == monomial_from_set(permute_set(sigma, A), I)
    for basis in (Basis.M_c, Basis.L, Basis.M_nc, Basis.Q, Basis.m, Basis.MonF):
        for index in all_indices(basis, min(max_size, 3), 1):
            if len(index) > 3:
                continue
            f = expand(basis, index, 5)
            yield f"invariance of {basis.value}[{index}] at N=5", check_invariance(f, 4)
    planted = SuperPoly("noncommutative", 4, {NCMonomial((1,), (1, 2)): 1, NCMonomial((2,), (2, 3)): 1})
    yield "planted non-invariant polynomial is detected", not check_invariance(planted, 3)
    yield "single monomial x1 is not invariant", not check_invariance(
        SuperPoly("commutative", 3, {CMonomial((), ((1, 1),)): 1}), 2)


# ---------------------------------------------------------------------------
# posets


def _inversion_identity(P) -> bool:
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y):
                total = sum(P.mobius(x, z) for z in P.elements if P.leq(x, z) and P.leq(z, y))
                if total != (1 if x == y else 0):
                    return False
    return True


def suite_posets(max_size: int = 4, seed: int = 0) -> Check:
    for alpha in all_indices(Basis.M_c, max_size + 1):
        P = dotted_downset(alpha)
        r = sum(p.value - 1 for p in alpha.parts if not p.dotted)
        yield f"downset of {alpha} is Boolean of rank {r}", (
            len(P) == 2 ** r and all(len(c) - 1 == r for c in P.maximal_chains()))
        if len(P) <= 8:
            yield f"Mobius inversion on downset of {alpha}", _inversion_identity(P)
    for I in all_indices(Basis.MonF, max_size + 1):
        P = sc_upset(I)
        images = {J: alpha_of(J) for J in P.elements}
        down = dotted_downset(gamma_of(I))
        iso = (set(images.values()) == set(down.elements) and len(set(images.values())) == len(P)
               and all(sc_leq(a, b) == dotted_leq(images[a], images[b]) for a in P.elements for b in P.elements))
        yield f"alpha is an isomorphism on the upset of {I}", iso
        yield f"upset of {I} has {len(down)} elements", len(P) == len(down)
    for I in all_indices(Basis.M_nc, max_size):
        P = sc_upset(I)
        if len(P) <= 8:
            yield f"Mobius inversion on upset of {I}", _inversion_identity(P)
            yield f"upset elements of {I} are above it", all(sc_leq(I, J) for J in P.elements)
    sigmas = {alpha_of(I) for I in all_indices(Basis.MonF, max_size + 1)}
    for sigma in sorted(sigmas, key=str):
        fiber = weak_fiber(sigma)
        brute = [I for I in superpermutations(sigma.n, sigma.m) if alpha_of(I) == sigma]
        lo, hi = fiber_bounds(sigma)
        interval = [I for I in brute if weak_leq(lo, I) and weak_leq(I, hi)]
        yield f"fiber over {sigma} is [{lo}, {hi}]", sorted(map(str, fiber)) == sorted(map(str, brute)) == sorted(
            map(str, interval))
        words = {w_of(I) for I in fiber}
        yield f"w is injective on the fiber over {sigma}", len(words) == len(fiber)
        if len(fiber) <= 24:
            P = interval_from_relation(fiber, weak_leq)
            ok = all(
                mobius_weak(lo, J) == P.mobius(lo, J) for J in fiber
            )
            yield f"weak-order Mobius over {sigma}", ok
            if len(fiber) <= 6:
                yield f"Mobius inversion on the fiber over {sigma}", _inversion_identity(P)


SUITES: dict[str, Callable[..., Check]] = {
    "paper-examples": suite_paper_examples,
    "hopf-axioms": suite_hopf_axioms,
    "oracle-products": suite_oracle_products,
    "actions": suite_actions,
    "posets": suite_posets,
}


def run_suite(name: str, max_size: int = 4, seed: int = 0, keep: int = 20) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    report = SuiteReport(name)
    start = time.perf_counter()
    for label, ok in SUITES[name](max_size=max_size, seed=seed):
        if ok:
            report.passed += 1
            continue
        report.failed += 1
        if report.first_failure is None:
            report.first_failure = label
        if len(report.failures) < keep:
            report.failures.append(label)
    report.seconds = time.perf_counter() - start
    return report
