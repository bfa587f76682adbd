"""The three partial orders and their Möbius functions.

* refinement of dotted compositions (plain parts split, dotted parts fixed);
* merge order on set supercompositions (increasing runs of adjacent
  non-fermionic blocks fuse);
* super left weak order on superpermutations (equal alpha image, inclusion
  of position-inversion sets of the associated words).

Intervals are enumerated explicitly; nothing here is meant for large sizes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .combinat import (
    DottedComposition,
    InvalidIndexError,
    Part,
    SetSupercomposition,
    alpha_of,
    inversions,
    is_superpermutation,
    w_of,
)

__all__ = [
    "PosetInterval",
    "interval_from_relation",
    "dotted_leq",
    "dotted_downset",
    "sc_leq",
    "sc_upset",
    "weak_leq",
    "weak_fiber",
    "weak_upset",
    "weak_interval",
    "fiber_bounds",
    "mobius_weak",
    "mobius_weak_upset",
]


@dataclass(frozen=True)
class PosetInterval:
    """A finite poset given by its elements and Hasse covers ``(lower, upper)``."""

    elements: tuple
    covers: frozenset

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def _up(self) -> dict:
        up: dict = {x: [] for x in self.elements}
        for lo, hi in self.covers:
            up[lo].append(hi)
        return up

    def leq(self, x, y) -> bool:
        if x == y:
            return True
        up = self._up()
        stack, seen = [x], {x}
        while stack:
            z = stack.pop()
            for t in up[z]:
                if t == y:
                    return True
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return False

    def minimal(self) -> list:
        uppers = {hi for _, hi in self.covers}
        return [x for x in self.elements if x not in uppers]

    def maximal(self) -> list:
        lowers = {lo for lo, _ in self.covers}
        return [x for x in self.elements if x not in lowers]

    def maximal_chains(self) -> list[list]:
        up = self._up()
        chains = []

        def walk(chain):
            nxt = up[chain[-1]]
            if not nxt:
                chains.append(chain)
            for t in sorted(nxt, key=str):
                walk(chain + [t])

        for x in sorted(self.minimal(), key=str):
            walk([x])
        return chains

    def mobius(self, x, y) -> int:
        """Möbius function on this poset, by the defining recursion."""
        if not self.leq(x, y):
            return 0
        between = [z for z in self.elements if self.leq(x, z) and self.leq(z, y)]
        return _mobius_from(x, between, self.leq)[y]

    def to_dot(self, name: str = "interval") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        ids = {x: f"n{i}" for i, x in enumerate(sorted(self.elements, key=str))}
        for x in sorted(self.elements, key=str):
            lines.append(f'  {ids[x]} [label="{x}"];')
        for lo, hi in sorted(self.covers, key=lambda e: (str(e[0]), str(e[1]))):
            lines.append(f"  {ids[lo]} -> {ids[hi]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def interval_from_relation(elements: Iterable, leq: Callable) -> PosetInterval:
    elems = tuple(sorted(set(elements), key=str))
    covers = set()
    for x in elems:
        for y in elems:
            if x == y or not leq(x, y):
                continue
            if not any(z != x and z != y and leq(x, z) and leq(z, y) for z in elems):
                covers.add((x, y))
    return PosetInterval(elems, frozenset(covers))


def _mobius_from(bottom, elements: Sequence, leq: Callable, rank=None) -> dict:
    # elements must all lie above bottom; processed bottom-up
    order = sorted(elements, key=rank) if rank else _linear_extension(elements, leq)
    mu = {}
    for y in order:
        if y == bottom:
            mu[y] = 1
        else:
            mu[y] = -sum(mu[z] for z in mu if leq(z, y))
    return mu


def _linear_extension(elements: Sequence, leq: Callable) -> list:
    rest = list(elements)
    out = []
    while rest:
        for x in rest:
            if not any(z != x and leq(z, x) for z in rest):
                out.append(x)
                rest.remove(x)
                break
    return out


# ---------------------------------------------------------------------------
# refinement order on dotted compositions


def _segments(alpha: DottedComposition):
    """Split into maximal runs of plain parts and single dotted parts."""
    out, run = [], []
    for p in alpha.parts:
        if p.dotted:
            if run:
                out.append(("plain", run))
                run = []
            out.append(("dot", [p]))
        else:
            run.append(p.value)
    if run:
        out.append(("plain", run))
    return out


def dotted_leq(beta: DottedComposition, alpha: DottedComposition) -> bool:
    """True iff ``beta`` refines ``alpha`` by splitting plain parts only."""
    i = 0
    bp = beta.parts
    for p in alpha.parts:
        if p.dotted:
            if i >= len(bp) or bp[i] != p:
                return False
            i += 1
            continue
        total = 0
        while total < p.value:
            if i >= len(bp) or bp[i].dotted:
                return False
            total += bp[i].value
            i += 1
        if total != p.value:
            return False
    return i == len(bp)


def _splittings(a: int):
    for cuts in itertools.product((False, True), repeat=a - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(Part(v) for v in parts)


def dotted_downset(alpha: DottedComposition) -> PosetInterval:
    """All refinements of ``alpha``; a Boolean lattice of rank sum(a - 1) over plain a."""
    options = [[(p,)] if p.dotted else list(_splittings(p.value)) for p in alpha.parts]
    elems = [
        DottedComposition(tuple(itertools.chain.from_iterable(choice)))
        for choice in itertools.product(*options)
    ]
    return interval_from_relation(elems, dotted_leq)


# ---------------------------------------------------------------------------
# merge order on set supercompositions


def _mergeable(a: frozenset, b: frozenset) -> bool:
    return 0 not in a and 0 not in b and max(a) < min(b)


def sc_leq(I: SetSupercomposition, J: SetSupercomposition) -> bool:
    """True iff ``J`` arises from ``I`` by fusing increasing runs of non-fermionic blocks."""
    if I.n != J.n or I.m != J.m:
        return False
    i = 0
    blocks = I.blocks
    for target in J.blocks:
        if i >= len(blocks):
            return False
        acc = blocks[i]
        i += 1
        if 0 in target:
            if acc != target:
                return False
            continue
        while acc != target:
            if i >= len(blocks) or not _mergeable(blocks[i - 1], blocks[i]):
                return False
            acc = acc | blocks[i]
            i += 1
            if not acc <= target:
                return False
    return i == len(blocks)


def _upset_elements(I: SetSupercomposition) -> list[SetSupercomposition]:
    blocks = I.blocks
    joints = [t for t in range(len(blocks) - 1) if _mergeable(blocks[t], blocks[t + 1])]
    out = []
    for mask in itertools.product((False, True), repeat=len(joints)):
        glue = {t for t, on in zip(joints, mask) if on}
        merged = []
        for t, b in enumerate(blocks):
            if t - 1 in glue:
                merged[-1] = merged[-1] | b
            else:
                merged.append(b)
        out.append(SetSupercomposition(tuple(merged)))
    return out


def sc_upset(I: SetSupercomposition) -> PosetInterval:
    return interval_from_relation(_upset_elements(I), sc_leq)


# ---------------------------------------------------------------------------
# super left weak order


def _inv(I: SetSupercomposition) -> frozenset:
    return inversions(w_of(I))


def weak_leq(I: SetSupercomposition, J: SetSupercomposition) -> bool:
    if not (is_superpermutation(I) and is_superpermutation(J)):
        return False
    return alpha_of(I) == alpha_of(J) and _inv(I) <= _inv(J)


def weak_fiber(sigma: DottedComposition) -> list[SetSupercomposition]:
    """Every superpermutation whose alpha image is ``sigma``."""
    if any(not p.dotted and p.value != 1 for p in sigma.parts):
        raise InvalidIndexError(f"{sigma} has a plain part > 1; no superpermutation maps to it")
    sizes = [p.value for p in sigma.parts]
    n = sum(sizes)
    out = []

    def place(t, remaining, acc):
        if t == len(sizes):
            out.append(SetSupercomposition(tuple(acc)))
            return
        for chosen in itertools.combinations(sorted(remaining), sizes[t]):
            block = frozenset(chosen) | ({0} if sigma.parts[t].dotted else set())
            place(t + 1, remaining - set(chosen), acc + [block])

    place(0, set(range(1, n + 1)), [])
    return out


def fiber_bounds(sigma: DottedComposition) -> tuple[SetSupercomposition, SetSupercomposition]:
    """Least and greatest elements of the weak-order fiber over ``sigma``."""
    if any(not p.dotted and p.value != 1 for p in sigma.parts):
        raise InvalidIndexError(f"{sigma} has a plain part > 1; no superpermutation maps to it")
    sizes = [p.value for p in sigma.parts]
    n = sum(sizes)
    low, high = [], []
    lo_next, hi_next = 1, n
    for p in sigma.parts:
        lo_vals = set(range(lo_next, lo_next + p.value))
        hi_vals = set(range(hi_next - p.value + 1, hi_next + 1))
        lo_next += p.value
        hi_next -= p.value
        z = {0} if p.dotted else set()
        low.append(frozenset(lo_vals | z))
        high.append(frozenset(hi_vals | z))
    return SetSupercomposition(tuple(low)), SetSupercomposition(tuple(high))


def weak_upset(I: SetSupercomposition) -> list[SetSupercomposition]:
    inv_i = _inv(I)
    return [K for K in weak_fiber(alpha_of(I)) if inv_i <= _inv(K)]


def weak_interval(I: SetSupercomposition, J: SetSupercomposition) -> PosetInterval:
    if not weak_leq(I, J):
        return PosetInterval((), frozenset())
    lo, hi = _inv(I), _inv(J)
    elems = [K for K in weak_fiber(alpha_of(I)) if lo <= _inv(K) <= hi]
    return interval_from_relation(elems, weak_leq)


def mobius_weak_upset(I: SetSupercomposition) -> dict[SetSupercomposition, int]:
    """``{J: mu_W(I, J)}`` for every ``J`` above ``I``, zeros omitted."""
    ups = weak_upset(I)
    invs = {K: _inv(K) for K in ups}
    mu: dict = {}
    for y in sorted(ups, key=lambda K: (len(invs[K]), str(K))):
        if y == I:
            mu[y] = 1
        else:
            mu[y] = -sum(v for z, v in mu.items() if invs[z] < invs[y])
    return {K: v for K, v in mu.items() if v}


def mobius_weak(I: SetSupercomposition, J: SetSupercomposition) -> int:
    """Möbius function of the super left weak order; 0 unless ``I <= J``."""
    if not weak_leq(I, J):
        return 0
    lo, hi = _inv(I), _inv(J)
    elems = [K for K in weak_fiber(alpha_of(I)) if lo <= _inv(K) <= hi]
    invs = {K: _inv(K) for K in elems}
    mu = _mobius_from(I, elems, lambda a, b: invs[a] <= invs[b], rank=lambda K: len(invs[K]))
    return mu[J]
