"""Brute-force polynomial oracle over a truncated alphabet.

Variables are ``theta_1..theta_N`` (anticommuting, square zero) and
``x_1..x_N`` (bosonic; commuting or not depending on the variant).  The two
kinds commute with each other, so every monomial has a normal form with the
thetas first, sorted.  Every basis element can be expanded as a polynomial
and every product or coproduct formula checked term by term.

Nothing here imports the product or coproduct formulas except to compare
against them.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .combinat import (
    DottedComposition,
    Part,
    SetSupercomposition,
    alpha_of,
    require_set_superpartition,
)
from .linear import Basis, LinearCombination, TensorCombination, basis_element

__all__ = [
    "NCMonomial",
    "CMonomial",
    "SuperPoly",
    "AlphabetOverflow",
    "mono_mul",
    "expand",
    "expand_combination",
    "std_and_I",
    "monomial_from_set",
    "pseudo_composition",
    "qs_action",
    "permute_set",
    "act",
    "check_invariance",
    "commutativize",
    "verify_product",
    "verify_coproduct",
    "verify_abelianization",
]

NC, C = "noncommutative", "commutative"


class AlphabetOverflow(ValueError):
    """An action pushed a variable index past the alphabet size."""


class NCMonomial(NamedTuple):
    thetas: tuple = ()
    word: tuple = ()

    @property
    def indices(self) -> frozenset:
        return frozenset(self.thetas) | frozenset(self.word)

    def __str__(self) -> str:
        t = " ".join(f"t{i}" for i in self.thetas)
        w = " ".join(f"x{i}" for i in self.word)
        if t and w:
            return f"{t} | {w}"
        return t or w or "1"


class CMonomial(NamedTuple):
    thetas: tuple = ()
    exps: tuple = ()    # sorted (index, exponent) pairs, exponents positive

    @property
    def indices(self) -> frozenset:
        return frozenset(self.thetas) | frozenset(i for i, _ in self.exps)

    def __str__(self) -> str:
        parts = [f"t{i}" for i in self.thetas]
        parts += [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.exps]
        return " ".join(parts) or "1"


Monomial = Union[NCMonomial, CMonomial]


def _variant(u: Monomial) -> str:
    return NC if isinstance(u, NCMonomial) else C


def _merge_thetas(a: Sequence[int], b: Sequence[int]) -> Optional[tuple[tuple, int]]:
    if set(a) & set(b):
        return None
    crossings = sum(1 for i in a for j in b if j < i)
    return tuple(sorted(a + b)), (-1) ** crossings


def mono_mul(u: Monomial, v: Monomial) -> Optional[tuple[Monomial, int]]:
    """Normal form of ``u*v`` as ``(monomial, sign)``, or None when it vanishes."""
    merged = _merge_thetas(tuple(u.thetas), tuple(v.thetas))
    if merged is None:
        return None
    thetas, sign = merged
    if isinstance(u, NCMonomial):
        return NCMonomial(thetas, u.word + v.word), sign
    exps: dict = defaultdict(int)
    for i, e in u.exps + v.exps:
        exps[i] += e
    return CMonomial(thetas, tuple(sorted(exps.items()))), sign


def _signed_monomial(variant: str, thetas: Sequence[int], bosons) -> tuple[Monomial, int]:
    """Build a monomial from thetas in the given (possibly unsorted) order."""
    thetas = list(thetas)
    inv = sum(1 for p in range(len(thetas)) for q in range(p + 1, len(thetas)) if thetas[p] > thetas[q])
    if variant == NC:
        return NCMonomial(tuple(sorted(thetas)), tuple(bosons)), (-1) ** inv
    exps: dict = defaultdict(int)
    for i, e in bosons:
        if e:
            exps[i] += e
    return CMonomial(tuple(sorted(thetas)), tuple(sorted(exps.items()))), (-1) ** inv


class SuperPoly:
    """Integer polynomial in a truncated super alphabet of size ``N``."""

    __slots__ = ("variant", "N", "terms")

    def __init__(self, variant: str, N: int, terms: Union[dict, Iterable] = ()):
        self.variant = variant
        self.N = N
        acc: dict = defaultdict(int)
        for u, c in (terms.items() if isinstance(terms, dict) else terms):
            acc[u] += c
        self.terms = {u: c for u, c in acc.items() if c}

    @classmethod
    def one(cls, variant: str, N: int) -> "SuperPoly":
        empty = NCMonomial() if variant == NC else CMonomial()
        return cls(variant, N, {empty: 1})

    def _check(self, other: "SuperPoly"):
        if self.variant != other.variant or self.N != other.N:
            raise ValueError("polynomials live in different alphabets")

    def __add__(self, other: "SuperPoly") -> "SuperPoly":
        self._check(other)
        return SuperPoly(self.variant, self.N, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "SuperPoly") -> "SuperPoly":
        self._check(other)
        return SuperPoly(self.variant, self.N, list(self.terms.items()) + [(u, -c) for u, c in other.terms.items()])

    def scale(self, c: int) -> "SuperPoly":
        return SuperPoly(self.variant, self.N, {u: c * v for u, v in self.terms.items()})

    def __mul__(self, other: "SuperPoly") -> "SuperPoly":
        self._check(other)
        acc: dict = defaultdict(int)
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                r = mono_mul(u, v)
                if r is not None:
                    acc[r[0]] += r[1] * a * b
        return SuperPoly(self.variant, self.N, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.variant == other.variant and self.N == other.N and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def to_text(self) -> str:
        rows = sorted((str(u), c) for u, c in self.terms.items())
        return "".join(f"{'+' if c > 0 else ''}{c} * {u}\n" for u, c in rows) or "0\n"

    def __repr__(self) -> str:
        return f"SuperPoly({self.variant}, N={self.N}, {len(self.terms)} terms)"


# ---------------------------------------------------------------------------
# expansions


def monomial_from_set(A: Sequence[int], index: Union[DottedComposition, SetSupercomposition]) -> Monomial:
    """``A^alpha`` (commutative) or ``A^I`` (noncommutative) for increasing ``A``."""
    A = list(A)
    if len(A) != len(index):
        raise ValueError(f"need {len(index)} values, got {len(A)}")
    if isinstance(index, DottedComposition):
        thetas = [a for a, p in zip(A, index.parts) if p.dotted]
        u, _ = _signed_monomial(C, thetas, [(a, p.value) for a, p in zip(A, index.parts)])
        return u
    return _nc_assignment(index, A)[0]


def _nc_builder(I: SetSupercomposition):
    """Map a choice of one variable per block to the signed monomial it produces."""
    owner = {t: r for r, b in enumerate(I.blocks) for t in b if t}
    pos = tuple(owner[t] for t in range(1, I.n + 1))
    ferm = tuple(r for r, b in enumerate(I.blocks) if 0 in b)

    def build(values: Sequence[int]) -> tuple[NCMonomial, int]:
        thetas = [values[r] for r in ferm]
        word = tuple(values[r] for r in pos)
        inv = sum(1 for p in range(len(thetas)) for q in range(p + 1, len(thetas)) if thetas[p] > thetas[q])
        return NCMonomial(tuple(sorted(thetas)), word), (-1) ** inv

    return build


def _nc_assignment(I: SetSupercomposition, values: Sequence[int]) -> tuple[NCMonomial, int]:
    # block r receives variable values[r]; thetas in block order
    return _nc_builder(I)(values)


def _expand_Mnc(I: SetSupercomposition, N: int) -> SuperPoly:
    build = _nc_builder(I)
    return SuperPoly(NC, N, [build(A) for A in itertools.combinations(range(1, N + 1), len(I))])


def _expand_Q(I: SetSupercomposition, N: int) -> SuperPoly:
    # weakly increasing block labels; a repeat only across an increasing
    # junction of two non-fermionic blocks
    k, blocks = len(I), I.blocks
    build = _nc_builder(I)
    out = []

    def walk(r, prev, acc):
        if r == k:
            out.append(build(acc))
            return
        lo = 1
        if r:
            a, b = blocks[r - 1], blocks[r]
            tie = 0 not in a and 0 not in b and max(a) < min(b)
            lo = prev if tie else prev + 1
        for v in range(lo, N + 1):
            walk(r + 1, v, acc + [v])

    walk(0, 0, [])
    return SuperPoly(NC, N, out)


def _expand_m(I: SetSupercomposition, N: int) -> SuperPoly:
    require_set_superpartition(I)
    build = _nc_builder(I)
    out = [build(g) for g in itertools.permutations(range(1, N + 1), len(I))]
    return SuperPoly(NC, N, out)


def _expand_Mc(alpha: DottedComposition, N: int) -> SuperPoly:
    out = []
    for A in itertools.combinations(range(1, N + 1), len(alpha)):
        out.append((monomial_from_set(A, alpha), 1))
    return SuperPoly(C, N, out)


def _expand_L(alpha: DottedComposition, N: int) -> SuperPoly:
    # every refinement of alpha, i.e. every way to split each plain part
    options = []
    for p in alpha.parts:
        if p.dotted:
            options.append([(p,)])
            continue
        splits = []
        for cuts in itertools.product((0, 1), repeat=p.value - 1):
            sizes, run = [], 1
            for c in cuts:
                if c:
                    sizes.append(run)
                    run = 1
                else:
                    run += 1
            sizes.append(run)
            splits.append(tuple(Part(s) for s in sizes))
        options.append(splits)
    acc: dict = defaultdict(int)
    for choice in itertools.product(*options):
        beta = DottedComposition(tuple(itertools.chain.from_iterable(choice)))
        for u, c in _expand_Mc(beta, N).terms.items():
            acc[u] += c
    return SuperPoly(C, N, acc)


def expand(basis: Union[Basis, str], index, N: int) -> SuperPoly:
    """Truncation of a basis element to the alphabet ``1..N``."""
    basis = Basis.parse(basis)
    basis.check_index(index)
    if basis is Basis.M_nc:
        return _expand_Mnc(index, N)
    if basis is Basis.Q:
        return _expand_Q(index, N)
    if basis is Basis.m:
        return _expand_m(index, N)
    if basis is Basis.M_c:
        return _expand_Mc(index, N)
    if basis is Basis.L:
        return _expand_L(index, N)
    from .hopf import change_basis

    return expand_combination(change_basis(basis_element(basis, index), Basis.Q), N)


def expand_combination(x: LinearCombination, N: int) -> SuperPoly:
    variant = C if x.basis.commutative else NC
    acc: dict = defaultdict(int)
    for index, c in x.terms.items():
        for u, d in expand(x.basis, index, N).terms.items():
            acc[u] += c * d
    return SuperPoly(variant, N, acc)


def commutativize(p: SuperPoly) -> SuperPoly:
    """Let the bosonic variables commute."""
    if p.variant == C:
        return p
    out = []
    for u, c in p.terms.items():
        exps: dict = defaultdict(int)
        for i in u.word:
            exps[i] += 1
        out.append((CMonomial(u.thetas, tuple(sorted(exps.items()))), c))
    return SuperPoly(C, p.N, out)


# ---------------------------------------------------------------------------
# standardization and actions


def std_and_I(u: NCMonomial) -> tuple[NCMonomial, SetSupercomposition]:
    """Standardized monomial and the set supercomposition recording its pattern."""
    ind = sorted(u.indices)
    rank = {v: r + 1 for r, v in enumerate(ind)}
    std = NCMonomial(tuple(rank[i] for i in u.thetas), tuple(rank[i] for i in u.word))
    blocks = []
    for v in ind:
        b = {t + 1 for t, w in enumerate(u.word) if w == v}
        if v in u.thetas:
            b.add(0)
        blocks.append(frozenset(b))
    return std, SetSupercomposition(tuple(blocks))


def pseudo_composition(u: CMonomial) -> list[tuple[int, bool]]:
    """The dotted pseudo-composition of a commutative monomial as ``(value, dotted)`` pairs."""
    if not u.indices:
        return []
    exps = dict(u.exps)
    return [(exps.get(i, 0), i in u.thetas) for i in range(1, max(u.indices) + 1)]


def _from_pseudo(parts: Sequence[tuple[int, bool]]) -> CMonomial:
    thetas = tuple(i + 1 for i, (_, d) in enumerate(parts) if d)
    exps = tuple((i + 1, v) for i, (v, _) in enumerate(parts) if v)
    return CMonomial(thetas, exps)


def _simple_c(i: int, u: CMonomial) -> CMonomial:
    parts = pseudo_composition(u)
    parts += [(0, False)] * (i + 1 - len(parts))
    a, b = parts[i - 1], parts[i]
    if a == (0, False) or b == (0, False):
        parts[i - 1], parts[i] = b, a
    return _from_pseudo(parts)


def _simple_nc(i: int, u: NCMonomial) -> NCMonomial:
    ind = u.indices
    if (i in ind) == (i + 1 in ind):
        return u
    src, dst = (i, i + 1) if i in ind else (i + 1, i)
    f = lambda j: dst if j == src else j  # noqa: E731
    return NCMonomial(tuple(f(j) for j in u.thetas), tuple(f(j) for j in u.word))


def qs_action(variant: str, sigma: Sequence[int], u: Monomial, N: Optional[int] = None) -> Monomial:
    """Apply ``s_{sigma[0]} ... s_{sigma[-1]}`` (rightmost first) to ``u``.

    Raises :class:`AlphabetOverflow` if ``N`` is given and an index exceeds it.
    """
    if variant not in (NC, C):
        raise ValueError(f"unknown variant {variant!r}")
    if _variant(u) != variant:
        raise ValueError("monomial does not match the variant")
    step = _simple_nc if variant == NC else _simple_c
    for i in reversed(list(sigma)):
        if i < 1:
            raise ValueError(f"s_{i} is not a simple transposition")
        u = step(i, u)
        if N is not None and u.indices and max(u.indices) > N:
            raise AlphabetOverflow(f"s_{i} moves an index past the alphabet size {N}")
    return u


def act(sigma: Sequence[int], p: SuperPoly) -> SuperPoly:
    """Extend :func:`qs_action` linearly; the actions never change signs."""
    return SuperPoly(p.variant, p.N, [(qs_action(p.variant, sigma, u, p.N), c) for u, c in p.terms.items()])


def check_invariance(f: SuperPoly, max_gen: int) -> bool:
    """True iff ``s_i f = f`` for every ``i <= max_gen``.

    Generators are capped at ``N - 1`` so the action never leaves the
    alphabet and truncation cannot produce a false negative.
    """
    for i in range(1, min(max_gen, f.N - 1) + 1):
        if act([i], f) != f:
            return False
    return True


def permute_set(sigma: Sequence[int], A: Iterable[int]) -> list[int]:
    """Image of a set under ``s_{sigma[0]} ... s_{sigma[-1]}``, sorted."""
    out = set(A)
    for i in reversed(list(sigma)):
        out = {i + 1 if a == i else i if a == i + 1 else a for a in out}
    return sorted(out)


# ---------------------------------------------------------------------------
# verification


def verify_product(basis: Union[Basis, str], I, J, N: int, product: Optional[LinearCombination] = None) -> bool:
    """Compare ``expand(I) * expand(J)`` with the expansion of the computed product."""
    basis = Basis.parse(basis)
    if product is None:
        product = basis_element(basis, I) * basis_element(basis, J)
    return expand(basis, I, N) * expand(basis, J, N) == expand_combination(product, N)


def _split(u: NCMonomial, N: int) -> tuple[NCMonomial, NCMonomial]:
    # x-variables are 1..N and y-variables N+1..2N; thetas stay sorted
    low = NCMonomial(tuple(i for i in u.thetas if i <= N), tuple(i for i in u.word if i <= N))
    high = NCMonomial(tuple(i - N for i in u.thetas if i > N), tuple(i - N for i in u.word if i > N))
    return low, high


def verify_coproduct(basis: Union[Basis, str], I, N: int, coproduct: Optional[TensorCombination] = None) -> bool:
    """Doubled-alphabet check of a coproduct with ``N`` variables per factor."""
    basis = Basis.parse(basis)
    if basis.commutative:
        raise ValueError("coproducts are checked in the noncommutative bases only")
    if coproduct is None:
        from .hopf import coproduct as cop

        coproduct = cop(basis_element(basis, I))
    lhs: dict = defaultdict(int)
    for u, c in expand(basis, I, 2 * N).terms.items():
        lhs[_split(u, N)] += c
    rhs: dict = defaultdict(int)
    for (a, b), c in coproduct.terms.items():
        for u, d in expand(basis, a, N).terms.items():
            for v, e in expand(basis, b, N).terms.items():
                rhs[(u, v)] += c * d * e
    clean = lambda d: {k: v for k, v in d.items() if v}  # noqa: E731
    return clean(lhs) == clean(rhs)


def verify_abelianization(I: SetSupercomposition, N: int) -> bool:
    """Commutative image of ``M_I`` equals ``M_{alpha(I)}`` in ``N`` variables."""
    return commutativize(expand(Basis.M_nc, I, N)) == expand(Basis.M_c, alpha_of(I), N)
