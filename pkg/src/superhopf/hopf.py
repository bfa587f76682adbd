"""Products, coproducts, antipode and basis changes.

Index-level routines take index objects and return a
:class:`~superhopf.linear.LinearCombination` (or a tensor); the generic
:func:`multiply`, :func:`coproduct`, :func:`antipode` and
:func:`change_basis` extend them linearly.

Signs: a shuffle of the blocks of ``I`` with the shifted blocks of ``J``
carries ``(-1)**eps`` where ``eps`` counts pairs (fermionic block of ``I``,
fermionic block of ``J``) in which the ``J`` block comes first.  Mergers never
change the sign of the parent shuffle.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Iterator, Optional, Sequence, Union

from .combinat import (
    DottedComposition,
    InvalidIndexError,
    SetSupercomposition,
    alpha_of,
    canonical_block_lift,
    gamma_of,
    global_descents,
    inversions,
    is_set_superpartition,
    is_superpermutation,
    lift,
    require_set_superpartition,
    require_superpermutation,
    shift,
    standardize,
    superpartition_sort,
    w_of,
)
from .linear import Basis, LinearCombination, TensorCombination, basis_element
from .posets import _upset_elements, dotted_downset, mobius_weak_upset, weak_fiber

__all__ = [
    "quasi_shuffles",
    "super_shuffles",
    "product_M",
    "product_Q",
    "product_m",
    "product_MonF",
    "product_L",
    "product_Mc",
    "coproduct_M",
    "coproduct_Q",
    "coproduct_m",
    "coproduct_MonF",
    "multiply",
    "coproduct",
    "counit",
    "antipode",
    "super_tensor_mul",
    "change_basis",
    "symmetric_to_m",
    "abelianize",
    "UnsupportedConversion",
    "NotSymmetricError",
]

SC = SetSupercomposition


class UnsupportedConversion(ValueError):
    pass


class NotSymmetricError(ArithmeticError):
    """An M-basis combination did not lie in the span of the m-basis."""


# ---------------------------------------------------------------------------
# shuffles


def _shuffles(I: SC, J: SC) -> Iterator[tuple[list, int]]:
    """Yield ``(L, sign)``; ``L`` lists ``(source, block)`` with source 'I' or 'J'."""
    h, k = len(I), len(J)
    Jb = shift(J, I.n).blocks
    for pos in itertools.combinations(range(h + k), h):
        pos_set = set(pos)
        seq, i, j = [], 0, 0
        for t in range(h + k):
            if t in pos_set:
                seq.append(("I", I.blocks[i]))
                i += 1
            else:
                seq.append(("J", Jb[j]))
                j += 1
        eps, j_ferm_seen = 0, 0
        for src, b in seq:
            if 0 in b:
                if src == "J":
                    j_ferm_seen += 1
                else:
                    eps += j_ferm_seen
        yield seq, (-1) ** eps


def quasi_shuffles(I: SC, J: SC) -> list[tuple[SC, int]]:
    """All ``(I, J)``-quasi-shuffles with their signs, one entry per merge pattern."""
    out = []
    for seq, sign in _shuffles(I, J):
        cand = [
            t for t in range(len(seq) - 1)
            if seq[t][0] == "I" and seq[t + 1][0] == "J"
            and not (0 in seq[t][1] and 0 in seq[t + 1][1])
        ]
        # an I-block followed by a J-block: candidate pairs never overlap
        for r in range(len(cand) + 1):
            for chosen in itertools.combinations(cand, r):
                glue = set(chosen)
                blocks, t = [], 0
                while t < len(seq):
                    if t in glue:
                        blocks.append(seq[t][1] | seq[t + 1][1])
                        t += 2
                    else:
                        blocks.append(seq[t][1])
                        t += 1
                out.append((SC(tuple(blocks)), sign))
    return out


def _increasing(a: frozenset, b: frozenset) -> bool:
    return 0 not in a and 0 not in b and max(a) < min(b)


def _super_merges(seq: list) -> Iterator[list]:
    """Disjoint mergers allowed in a super-shuffle, as lists of blocks."""
    n = len(seq)

    def options(t):
        # (end, merged block) for every merger starting at t
        src, b = seq[t]
        if src == "I" and 0 in b:
            acc, q = b, t + 1
            while q < n and seq[q][0] == "J" and 0 not in seq[q][1]:
                if q > t + 1 and not _increasing(seq[q - 1][1], seq[q][1]):
                    break
                acc = acc | seq[q][1]
                yield q, acc
                q += 1
        if src == "I" and 0 not in b:
            acc, q = b, t
            while True:
                nxt = q + 1
                if nxt >= n:
                    break
                s2, b2 = seq[nxt]
                if s2 == "J" and 0 in b2:
                    yield nxt, acc | b2
                    break
                if s2 == "I" and _increasing(seq[q][1], b2):
                    acc = acc | b2
                    q = nxt
                    continue
                break

    def walk(t):
        if t == n:
            yield []
            return
        for rest in walk(t + 1):
            yield [seq[t][1]] + rest
        for end, merged in options(t):
            for rest in walk(end + 1):
                yield [merged] + rest

    yield from walk(0)


def super_shuffles(I: SC, J: SC) -> list[tuple[SC, int]]:
    """All ``(I, J)``-super-shuffles with their signs."""
    out = []
    for seq, sign in _shuffles(I, J):
        for blocks in _super_merges(seq):
            out.append((SC(tuple(blocks)), sign))
    return out


# ---------------------------------------------------------------------------
# index-level products


def _collect(basis: Basis, pairs, check: bool = False) -> LinearCombination:
    acc: dict = defaultdict(int)
    for K, c in pairs:
        acc[K] += c
    return LinearCombination(basis, acc, check=check)


def product_M(I: SC, J: SC) -> LinearCombination:
    return _collect(Basis.M_nc, quasi_shuffles(I, J))


def product_Q(I: SC, J: SC) -> LinearCombination:
    return _collect(Basis.Q, super_shuffles(I, J))


def product_MonF(I: SC, J: SC) -> LinearCombination:
    require_superpermutation(I)
    require_superpermutation(J)
    q = multiply(_MonF_to_Q(I), _MonF_to_Q(J))
    return _Q_to_MonF(q)


def product_m(I: SC, J: SC) -> LinearCombination:
    """Product in the m-basis, computed through the M-basis."""
    require_set_superpartition(I)
    require_set_superpartition(J)
    return symmetric_to_m(multiply(_m_to_M(I), _m_to_M(J)))


def product_L(alpha: DottedComposition, beta: DottedComposition,
              I: Optional[SC] = None, J: Optional[SC] = None) -> LinearCombination:
    """``L_alpha L_beta`` as the gamma image of the super-shuffles of two lifts.

    ``I`` and ``J`` default to :func:`~superhopf.combinat.lift`; any
    superpermutations with the right gamma image may be supplied instead.
    """
    I = lift(alpha) if I is None else I
    J = lift(beta) if J is None else J
    if gamma_of(I) != alpha or gamma_of(J) != beta:
        raise InvalidIndexError("representatives do not map to the given dotted compositions")
    return _collect(Basis.L, ((gamma_of(K), s) for K, s in super_shuffles(I, J)))


def product_Mc(alpha: DottedComposition, beta: DottedComposition) -> LinearCombination:
    """``M_alpha M_beta`` in sQSym, transported from sNCQSym along abelianization."""
    I, J = canonical_block_lift(alpha), canonical_block_lift(beta)
    return _collect(Basis.M_c, ((alpha_of(K), s) for K, s in quasi_shuffles(I, J)))


_INDEX_PRODUCTS = {
    Basis.M_nc: product_M,
    Basis.Q: product_Q,
    Basis.m: product_m,
    Basis.MonF: product_MonF,
    Basis.L: product_L,
    Basis.M_c: product_Mc,
}


def multiply(a: LinearCombination, b: LinearCombination) -> LinearCombination:
    """Bilinear product of two combinations in the same basis."""
    if a.basis is not b.basis:
        raise ValueError(f"cannot multiply {a.basis.value} by {b.basis.value}; convert first")
    basis = a.basis
    prod = _INDEX_PRODUCTS[basis]
    empty = basis.empty_index()
    acc: dict = defaultdict(int)
    for I, c in a.terms.items():
        for J, d in b.terms.items():
            if I == empty:
                acc[J] += c * d
            elif J == empty:
                acc[I] += c * d
            else:
                for K, e in prod(I, J).terms.items():
                    acc[K] += c * d * e
    return LinearCombination(basis, acc, check=False)


# ---------------------------------------------------------------------------
# coproducts


def _deconcatenations(I: SC, cuts: Sequence[int]):
    for i in cuts:
        yield (standardize(I.blocks[:i]), standardize(I.blocks[i:])), 1


def coproduct_M(I: SC) -> TensorCombination:
    return TensorCombination(Basis.M_nc, _deconcatenations(I, range(len(I) + 1)))


def coproduct_Q(I: SC) -> TensorCombination:
    return TensorCombination(Basis.Q, _deconcatenations(I, range(len(I) + 1)))


def coproduct_MonF(I: SC) -> TensorCombination:
    require_superpermutation(I)
    return TensorCombination(Basis.MonF, _deconcatenations(I, global_descents(I)))


def coproduct_m(I: SC) -> TensorCombination:
    require_set_superpartition(I)
    k = len(I)
    ferm = [0 in b for b in I.blocks]
    terms = []
    for mask in itertools.product((False, True), repeat=k):
        A = [t for t in range(k) if mask[t]]
        Ac = [t for t in range(k) if not mask[t]]
        inv = sum(1 for p in Ac for q in A if p < q and ferm[p] and ferm[q])
        left = standardize([I.blocks[t] for t in A])
        right = standardize([I.blocks[t] for t in Ac])
        terms.append(((left, right), (-1) ** inv))
    return TensorCombination(Basis.m, terms)


_INDEX_COPRODUCTS = {
    Basis.M_nc: coproduct_M,
    Basis.Q: coproduct_Q,
    Basis.m: coproduct_m,
    Basis.MonF: coproduct_MonF,
}


def coproduct(x: LinearCombination) -> TensorCombination:
    if x.basis not in _INDEX_COPRODUCTS:
        raise UnsupportedConversion(f"no coproduct is provided for basis {x.basis.value}")
    cop = _INDEX_COPRODUCTS[x.basis]
    acc: dict = defaultdict(int)
    for I, c in x.terms.items():
        for key, d in cop(I).terms.items():
            acc[key] += c * d
    return TensorCombination(x.basis, acc)


def counit(x: LinearCombination) -> int:
    """Coefficient of the empty index."""
    return x.counit()


def apply_to_factor(t: TensorCombination, position: int) -> TensorCombination:
    """Apply the coproduct to one tensor factor, raising the arity by one."""
    acc: dict = defaultdict(int)
    for key, c in t.terms.items():
        for (a, b), d in _INDEX_COPRODUCTS[t.basis](key[position]).terms.items():
            acc[key[:position] + (a, b) + key[position + 1:]] += c * d
    return TensorCombination(t.basis, acc, arity=t.arity + 1)


def super_tensor_mul(a: TensorCombination, b: TensorCombination) -> TensorCombination:
    """Product in the super tensor square: ``(x#y)(z#w) = (-1)**(|y||z|) xz # yw``."""
    if a.basis is not b.basis or a.arity != 2 or b.arity != 2:
        raise ValueError("super_tensor_mul expects two 2-fold tensors in one basis")
    basis = a.basis
    acc: dict = defaultdict(int)
    for (x, y), c in a.terms.items():
        for (z, w), d in b.terms.items():
            sign = -1 if (y.parity and z.parity) else 1
            left = multiply(basis_element(basis, x), basis_element(basis, z))
            right = multiply(basis_element(basis, y), basis_element(basis, w))
            for p, e in left.terms.items():
                for q, f in right.terms.items():
                    acc[(p, q)] += sign * c * d * e * f
    return TensorCombination(basis, acc)


def antipode(x: LinearCombination) -> LinearCombination:
    """Antipode via Takeuchi's formula.

    ``S = sum_k (-1)**k m^(k-1) (id - unit*counit)^(tensor k) Delta^(k-1)``; the
    reduced iterated coproduct vanishes once ``k`` exceeds the block count.
    """
    basis = x.basis
    if basis not in _INDEX_COPRODUCTS:
        raise UnsupportedConversion(f"no antipode is provided for basis {basis.value}")
    empty = basis.empty_index()
    result: dict = defaultdict(int)
    result[empty] += x[empty]
    # reduced k-fold coproducts, grown one factor at a time from the right
    layer = {(I,): c for I, c in x.terms.items() if I != empty}
    k = 1
    while layer:
        for key, c in layer.items():
            prod = basis_element(basis, key[0])
            for idx in key[1:]:
                prod = multiply(prod, basis_element(basis, idx))
            for K, d in prod.terms.items():
                result[K] += (-1) ** k * c * d
        nxt: dict = defaultdict(int)
        for key, c in layer.items():
            for (a, b), d in _INDEX_COPRODUCTS[basis](key[-1]).terms.items():
                if a != empty and b != empty:
                    nxt[key[:-1] + (a, b)] += c * d
        layer = {key: c for key, c in nxt.items() if c}
        k += 1
    return LinearCombination(basis, result, check=False)


# ---------------------------------------------------------------------------
# basis changes


def _Q_to_M(I: SC) -> LinearCombination:
    return LinearCombination(Basis.M_nc, {J: 1 for J in _upset_elements(I)}, check=False)


def _M_to_Q(I: SC) -> LinearCombination:
    k = len(I)
    return LinearCombination(
        Basis.Q, {J: (-1) ** (k - len(J)) for J in _upset_elements(I)}, check=False
    )


def _MonF_to_Q(I: SC) -> LinearCombination:
    require_superpermutation(I)
    return LinearCombination(Basis.Q, mobius_weak_upset(I), check=False)


def _m_to_M(I: SC) -> LinearCombination:
    require_set_superpartition(I)
    k = len(I)
    ferm = [0 in b for b in I.blocks]
    terms = {}
    for perm in itertools.permutations(range(k)):
        # block p lands at position where[p]
        where = {p: t for t, p in enumerate(perm)}
        inv = sum(
            1 for p in range(k) for q in range(p + 1, k)
            if ferm[p] and ferm[q] and where[p] > where[q]
        )
        terms[SC(tuple(I.blocks[p] for p in perm))] = (-1) ** inv
    return LinearCombination(Basis.M_nc, terms, check=False)


def _L_to_Mc(alpha: DottedComposition) -> LinearCombination:
    return LinearCombination(Basis.M_c, {b: 1 for b in dotted_downset(alpha).elements}, check=False)


def _Mc_to_L(alpha: DottedComposition) -> LinearCombination:
    k = len(alpha)
    return LinearCombination(
        Basis.L, {b: (-1) ** (len(b) - k) for b in dotted_downset(alpha).elements}, check=False
    )


def _linear(f, target: Basis):
    def apply(x: LinearCombination) -> LinearCombination:
        acc: dict = defaultdict(int)
        for I, c in x.terms.items():
            for J, d in f(I).terms.items():
                acc[J] += c * d
        return LinearCombination(target, acc, check=False)

    return apply


def _Q_to_MonF(x: LinearCombination) -> LinearCombination:
    # one pass per weak-order fiber: coefficient of J sums the c_I with I <= J
    by_fiber: dict = defaultdict(dict)
    for I, c in x.terms.items():
        if not is_superpermutation(I):
            raise UnsupportedConversion(f"Q[{I}] is not in sFQSym: {I} is not a superpermutation")
        by_fiber[alpha_of(I)][I] = c
    acc: dict = defaultdict(int)
    for sigma, terms in by_fiber.items():
        invs = {I: inversions(w_of(I)) for I in terms}
        for J in weak_fiber(sigma):
            inv_j = inversions(w_of(J))
            acc[J] += sum(c for I, c in terms.items() if invs[I] <= inv_j)
    return LinearCombination(Basis.MonF, acc, check=False)


_EDGES = {
    (Basis.Q, Basis.M_nc): _linear(_Q_to_M, Basis.M_nc),
    (Basis.M_nc, Basis.Q): _linear(_M_to_Q, Basis.Q),
    (Basis.MonF, Basis.Q): _linear(_MonF_to_Q, Basis.Q),
    (Basis.Q, Basis.MonF): _Q_to_MonF,
    (Basis.m, Basis.M_nc): _linear(_m_to_M, Basis.M_nc),
    (Basis.L, Basis.M_c): _linear(_L_to_Mc, Basis.M_c),
    (Basis.M_c, Basis.L): _linear(_Mc_to_L, Basis.L),
}


def _route(source: Basis, target: Basis) -> list[Basis]:
    frontier, prev = [source], {source: None}
    while frontier:
        nxt = []
        for b in frontier:
            for (s, t) in _EDGES:
                if s is b and t not in prev:
                    prev[t] = b
                    nxt.append(t)
        frontier = nxt
    if target not in prev:
        raise UnsupportedConversion(f"no conversion from {source.value} to {target.value}")
    path = [target]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def change_basis(x: LinearCombination, target: Union[Basis, str]) -> LinearCombination:
    """Express ``x`` in ``target``.

    Direct routes: Q <-> Mnc, MonF <-> Q (superpermutations only), m -> Mnc,
    L <-> Mc; longer routes chain these.  Mnc -> m is refused here because it
    needs symmetry; see :func:`symmetric_to_m`.
    """
    target = Basis.parse(target)
    path = _route(x.basis, target)
    for s, t in zip(path, path[1:]):
        x = _EDGES[(s, t)](x)
    return x


def symmetric_to_m(x: LinearCombination) -> LinearCombination:
    """Rewrite an M-basis (or Q-basis) combination in the m-basis.

    Raises :class:`NotSymmetricError` if ``x`` is not in the span of the
    m-basis.
    """
    if x.basis is not Basis.M_nc:
        x = change_basis(x, Basis.M_nc)
    coeffs: dict = {}
    for K in x.terms:
        P, _ = superpartition_sort(K)
        if not is_set_superpartition(P):
            raise NotSymmetricError(f"M[{K}] has repeated blocks; no m-basis element contains it")
        coeffs[P] = x[P]
    expected: dict = defaultdict(int)
    for P, c in coeffs.items():
        if not c:
            continue
        for K, s in _m_to_M(P).terms.items():
            expected[K] += c * s
    residual = x - LinearCombination(Basis.M_nc, expected, check=False)
    if residual:
        raise NotSymmetricError(f"residual non-symmetric part: {residual}")
    return LinearCombination(Basis.m, coeffs)


def abelianize(x: LinearCombination) -> LinearCombination:
    """Let the bosonic variables commute.

    Mnc[I] -> Mc[alpha(I)] and Q[I] -> L[gamma(I)] (superpermutations only);
    m and MonF inputs are first rewritten in Mnc and Q respectively.
    """
    if x.basis is Basis.m:
        x = change_basis(x, Basis.M_nc)
    if x.basis is Basis.MonF:
        x = change_basis(x, Basis.Q)
    if x.basis is Basis.M_nc:
        return _linear(lambda I: basis_element(Basis.M_c, alpha_of(I)), Basis.M_c)(x)
    if x.basis is Basis.Q:
        for I in x.terms:
            if not is_superpermutation(I):
                raise UnsupportedConversion(
                    f"the image of Q[{I}] as a fundamental function is defined only for superpermutations"
                )
        return _linear(lambda I: basis_element(Basis.L, gamma_of(I)), Basis.L)(x)
    raise UnsupportedConversion(f"cannot abelianize basis {x.basis.value}")
