"""Index objects: dotted compositions and set supercompositions.

A set supercomposition is an ordered sequence of blocks.  Each block is a
finite set of nonnegative integers; the element 0 marks a fermionic block.
After discarding 0, the blocks partition ``{1, ..., n}``.  Superpermutations
and set superpartitions are set supercompositions satisfying extra
conditions, exposed here as predicates rather than subclasses.

The text grammar shared by the whole package::

    block                  {0,1,3}
    set supercomposition   {0,1,3}|{4}|{0}|{0,2}     (empty: e)
    dotted composition     (1,2,.0,1,.3,3)           (empty: e)
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

__all__ = [
    "Part",
    "DottedComposition",
    "SetSupercomposition",
    "Bidegree",
    "ParseError",
    "InvalidIndexError",
    "parse_index",
    "parse_dotted",
    "parse_supercomposition",
    "bidegree",
    "shift",
    "standardize",
    "alpha_of",
    "gamma_of",
    "descent_composition",
    "w_of",
    "inversions",
    "global_descents",
    "lift",
    "canonical_block_lift",
    "is_superpermutation",
    "is_set_superpartition",
    "superpartition_sort",
    "require_superpermutation",
    "require_set_superpartition",
    "set_supercompositions",
    "superpermutations",
    "set_superpartitions",
    "dotted_compositions",
]


class ParseError(ValueError):
    """Malformed index text.  ``position`` is the 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class InvalidIndexError(ValueError):
    """Well-formed input that violates an axiom of the index type."""


# ---------------------------------------------------------------------------
# dotted compositions


class Part(NamedTuple):
    value: int
    dotted: bool = False

    def __str__(self) -> str:
        return f".{self.value}" if self.dotted else str(self.value)


@dataclass(frozen=True)
class DottedComposition:
    """Finite sequence of parts; plain parts are positive, dotted parts >= 0."""

    parts: tuple[Part, ...] = ()

    def __post_init__(self):
        parts = tuple(Part(int(v), bool(d)) for v, d in self.parts)
        for p in parts:
            if p.value < 0:
                raise InvalidIndexError(f"negative part {p.value}")
            if not p.dotted and p.value == 0:
                raise InvalidIndexError("plain parts must be positive (use .0 for a dotted zero)")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: Union[int, str, Part]) -> "DottedComposition":
        """``DottedComposition.of(1, 2, ".0")`` builds (1,2,.0)."""
        out = []
        for p in parts:
            if isinstance(p, Part):
                out.append(p)
            elif isinstance(p, str):
                out.append(Part(int(p.lstrip(".")), p.startswith(".")))
            else:
                out.append(Part(int(p), False))
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[Part]:
        return iter(self.parts)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return DottedComposition(self.parts[i])
        return self.parts[i]

    def __add__(self, other: "DottedComposition") -> "DottedComposition":
        return DottedComposition(self.parts + other.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "e"
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"DottedComposition({self})"

    def __lt__(self, other: "DottedComposition") -> bool:
        return str(self) < str(other)

    @property
    def n(self) -> int:
        return sum(p.value for p in self.parts)

    @property
    def m(self) -> int:
        return sum(1 for p in self.parts if p.dotted)

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def parity(self) -> int:
        return self.m % 2

    def to_structured(self) -> list:
        return [[p.value, p.dotted] for p in self.parts]


# ---------------------------------------------------------------------------
# set supercompositions


class Bidegree(NamedTuple):
    n: int
    m: int

    @property
    def parity(self) -> int:
        return self.m % 2


def _format_block(block: frozenset) -> str:
    return "{" + ",".join(str(x) for x in sorted(block)) + "}"


@dataclass(frozen=True)
class SetSupercomposition:
    """Ordered blocks whose nonzero elements are exactly ``offset+1 .. offset+n``.

    ``offset`` is 0 for every genuine index; :func:`shift` produces the others.
    """

    blocks: tuple[frozenset, ...] = ()
    offset: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        blocks = tuple(frozenset(int(x) for x in b) for b in self.blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise InvalidIndexError("blocks must be nonempty")
            for x in b:
                if x < 0:
                    raise InvalidIndexError(f"negative element {x}")
                if x and x in seen:
                    raise InvalidIndexError(
                        f"nonzero element {x} repeated (blocks must meet only in 0)"
                    )
                seen.add(x)
        seen.discard(0)
        n, lo = len(seen), self.offset
        if seen != set(range(lo + 1, lo + n + 1)):
            missing = sorted(set(range(lo + 1, max(seen) + 1)) - seen)
            raise InvalidIndexError(
                f"nonzero elements must be exactly {lo + 1}..{lo + n}; missing {missing}"
            )
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "SetSupercomposition":
        return cls(tuple(frozenset(b) for b in blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]

    def __str__(self) -> str:
        if not self.blocks:
            return "e"
        return "|".join(_format_block(b) for b in self.blocks)

    def __repr__(self) -> str:
        return f"SetSupercomposition({self})"

    def __lt__(self, other: "SetSupercomposition") -> bool:
        return str(self) < str(other)

    @property
    def n(self) -> int:
        return sum(len(b - {0}) for b in self.blocks)

    @property
    def m(self) -> int:
        return sum(1 for b in self.blocks if 0 in b)

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def parity(self) -> int:
        return self.m % 2

    def fermionic(self, i: int) -> bool:
        return 0 in self.blocks[i]

    def to_structured(self) -> list:
        return [sorted(b) for b in self.blocks]


Index = Union[DottedComposition, SetSupercomposition]


# ---------------------------------------------------------------------------
# parsing

_INT = re.compile(r"\d+")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        match = _INT.match(self.text, self.pos)
        if not match:
            self.error("expected a nonnegative integer")
        self.pos = match.end()
        return int(match.group())

    def block(self) -> list[int]:
        self.expect("{")
        if self.peek() == "}":
            self.error("empty block")
        items = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.integer())
        self.expect("}")
        if len(set(items)) != len(items):
            raise InvalidIndexError(f"repeated element inside block {{{','.join(map(str, items))}}}")
        return items

    def end(self):
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")


def _is_empty_token(text: str) -> bool:
    return text.strip() in ("e", "()", "", "∅")


def parse_supercomposition(text: str) -> SetSupercomposition:
    """Parse ``{..}|{..}`` (or the tuple form ``({..},{..})``) into a set supercomposition."""
    if _is_empty_token(text):
        return SetSupercomposition()
    p = _Parser(text)
    tupled = p.peek() == "("
    if tupled:
        p.pos += 1
    sep = "," if tupled else "|"
    blocks = [p.block()]
    while p.peek() == sep:
        p.pos += 1
        blocks.append(p.block())
    if tupled:
        p.expect(")")
    p.end()
    return SetSupercomposition.of(*blocks)


def parse_dotted(text: str) -> DottedComposition:
    """Parse ``(1,2,.0)`` into a dotted composition."""
    if _is_empty_token(text):
        return DottedComposition()
    p = _Parser(text)
    p.expect("(")
    parts = []
    while True:
        dotted = False
        if p.peek() == ".":
            p.pos += 1
            dotted = True
        start = p.pos
        value = p.integer()
        if not dotted and value == 0:
            p.pos = start
            p.error("plain part 0 is not allowed")
        parts.append(Part(value, dotted))
        if p.peek() == ",":
            p.pos += 1
            continue
        break
    p.expect(")")
    p.end()
    return DottedComposition(tuple(parts))


def parse_index(text: str) -> Index:
    """Parse either index kind.  ``e`` parses as the empty set supercomposition."""
    stripped = text.strip()
    if stripped == "()":
        return DottedComposition()
    if _is_empty_token(stripped):
        return SetSupercomposition()
    if stripped.startswith("{") or stripped.startswith("({"):
        return parse_supercomposition(text)
    if stripped.startswith("("):
        return parse_dotted(text)
    raise ParseError("expected '{', '(' or 'e'", text, len(text) - len(text.lstrip()))


# ---------------------------------------------------------------------------
# structural maps


def bidegree(I: SetSupercomposition) -> Bidegree:
    return Bidegree(I.n, I.m)


def shift(J: SetSupercomposition, n: int) -> SetSupercomposition:
    """Add ``n`` to every positive element; zeros stay put."""
    if n == 0:
        return J
    return SetSupercomposition(
        tuple(frozenset(x + n if x else 0 for x in b) for b in J.blocks), J.offset + n
    )


def standardize(blocks: Union[SetSupercomposition, Sequence[Iterable[int]]]) -> SetSupercomposition:
    """Relabel nonzero elements order-preservingly onto 1..n.

    Raises :class:`InvalidIndexError` if two blocks share a nonzero element.
    """
    if isinstance(blocks, SetSupercomposition):
        blocks = blocks.blocks
    blocks = [frozenset(b) for b in blocks]
    values: list[int] = []
    for b in blocks:
        values.extend(x for x in b if x)
    if len(values) != len(set(values)):
        dup = next(x for x in values if values.count(x) > 1)
        raise InvalidIndexError(f"nonzero element {dup} repeated (blocks must meet only in 0)")
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return SetSupercomposition(
        tuple(frozenset(rank[x] if x else 0 for x in b) for b in blocks)
    )


def alpha_of(I: SetSupercomposition) -> DottedComposition:
    return DottedComposition(tuple(Part(len(b - {0}), 0 in b) for b in I.blocks))


def descent_composition(word: Sequence[int]) -> list[int]:
    """Composition of ``len(word)`` cut at the descents of ``word``."""
    if not word:
        return []
    parts, run = [], 1
    for a, b in zip(word, word[1:]):
        if a > b:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return parts


def is_superpermutation(I: SetSupercomposition) -> bool:
    return all(0 in b or len(b) == 1 for b in I.blocks)


def require_superpermutation(I: SetSupercomposition) -> SetSupercomposition:
    if not is_superpermutation(I):
        raise InvalidIndexError(f"{I} is not a superpermutation (non-fermionic blocks must be singletons)")
    return I


def gamma_of(I: SetSupercomposition) -> DottedComposition:
    """Dotted composition of a superpermutation.

    Fermionic blocks contribute a dotted part; each maximal run of singleton
    blocks contributes the descent composition of the word it spells.
    """
    require_superpermutation(I)
    parts: list[Part] = []
    segment: list[int] = []
    for b in I.blocks:
        if 0 in b:
            parts.extend(Part(a) for a in descent_composition(segment))
            segment = []
            parts.append(Part(len(b) - 1, True))
        else:
            (a,) = b
            segment.append(a)
    parts.extend(Part(a) for a in descent_composition(segment))
    return DottedComposition(tuple(parts))


def w_of(I: SetSupercomposition) -> tuple[int, ...]:
    """Word of nonzero elements, blocks left to right, each block ascending."""
    require_superpermutation(I)
    word: list[int] = []
    for b in I.blocks:
        word.extend(sorted(b - {0}))
    return tuple(word)


def inversions(word: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Position pairs ``(i, j)``, 1-based with ``i < j``, where ``word[i] > word[j]``."""
    return frozenset(
        (i + 1, j + 1)
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def global_descents(I: SetSupercomposition) -> list[int]:
    require_superpermutation(I)
    k = len(I)
    out = [0]
    for d in range(1, k):
        left = [x for b in I.blocks[:d] for x in b if x]
        right = [x for b in I.blocks[d:] for x in b if x]
        if not left or not right or min(left) > max(right):
            out.append(d)
    if k:
        out.append(k)
    return out


def lift(alpha: DottedComposition) -> SetSupercomposition:
    """A superpermutation whose gamma image is ``alpha``.

    Runs of plain parts become one singleton segment whose j-th run takes
    the j-th highest interval of fresh values in ascending order, so every
    run boundary is a descent.  A dotted part ``.a`` becomes ``{0}`` plus
    the next ``a`` fresh values.
    """
    blocks: list[frozenset] = []
    nxt = 1
    parts = list(alpha.parts)
    i = 0
    while i < len(parts):
        if parts[i].dotted:
            a = parts[i].value
            blocks.append(frozenset({0, *range(nxt, nxt + a)}))
            nxt += a
            i += 1
            continue
        j = i
        while j < len(parts) and not parts[j].dotted:
            j += 1
        runs = [p.value for p in parts[i:j]]
        top = nxt + sum(runs)
        for r in runs:
            top -= r
            blocks.extend(frozenset({v}) for v in range(top, top + r))
        nxt += sum(runs)
        i = j
    return SetSupercomposition(tuple(blocks))


def canonical_block_lift(alpha: DottedComposition) -> SetSupercomposition:
    """One block per part: ``a`` -> next a values, ``.a`` -> 0 plus next a values."""
    blocks = []
    nxt = 1
    for p in alpha.parts:
        vals = set(range(nxt, nxt + p.value))
        nxt += p.value
        blocks.append(frozenset(vals | {0}) if p.dotted else frozenset(vals))
    return SetSupercomposition(tuple(blocks))


def _precedes(a: frozenset, b: frozenset) -> bool:
    return min(a - b, default=0) < min(b - a, default=0)


def is_set_superpartition(I: SetSupercomposition) -> bool:
    blocks = I.blocks
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if blocks[i] == blocks[j] or not _precedes(blocks[i], blocks[j]):
                return False
    return True


def require_set_superpartition(I: SetSupercomposition) -> SetSupercomposition:
    if not is_set_superpartition(I):
        raise InvalidIndexError(
            f"{I} is not a set superpartition (blocks must be distinct, "
            "fermionic blocks first, ordered by least nonzero element)"
        )
    return I


def _superpartition_key(b: frozenset):
    return (0 not in b, min(b - {0}, default=0))


def superpartition_sort(I: SetSupercomposition) -> tuple[SetSupercomposition, list[int]]:
    """Reorder blocks into set-superpartition order.

    Returns the sorted index and the permutation ``perm`` with
    ``I.blocks[perm[t]]`` landing at position ``t``.
    """
    perm = sorted(range(len(I)), key=lambda t: _superpartition_key(I.blocks[t]))
    return SetSupercomposition(tuple(I.blocks[t] for t in perm)), perm


# ---------------------------------------------------------------------------
# enumeration


def _ordered_set_partitions(n: int) -> Iterator[list[frozenset]]:
    for r in range(0, n + 1):
        if n and r == 0:
            continue
        for labels in itertools.product(range(r), repeat=n):
            if len(set(labels)) != r:
                continue
            blocks = [set() for _ in range(r)]
            for x, lab in enumerate(labels, start=1):
                blocks[lab].add(x)
            yield [frozenset(b) for b in blocks]


def set_supercompositions(n: int, m: int) -> Iterator[SetSupercomposition]:
    """All set supercompositions of bidegree ``(n, m)``."""
    zero = frozenset({0})
    for osp in _ordered_set_partitions(n):
        r = len(osp)
        for nf in range(0, min(r, m) + 1):
            z = m - nf
            for ferm in itertools.combinations(range(r), nf):
                base = [b | zero if t in ferm else b for t, b in enumerate(osp)]
                for slots in itertools.combinations(range(r + z), z):
                    it = iter(base)
                    blocks = [zero if s in slots else next(it) for s in range(r + z)]
                    yield SetSupercomposition(tuple(blocks))


def superpermutations(n: int, m: int) -> Iterator[SetSupercomposition]:
    return (I for I in set_supercompositions(n, m) if is_superpermutation(I))


def set_superpartitions(n: int, m: int) -> Iterator[SetSupercomposition]:
    return (I for I in set_supercompositions(n, m) if is_set_superpartition(I))


def dotted_compositions(size: int) -> Iterator[DottedComposition]:
    """All dotted compositions with ``n + m == size``."""
    if size == 0:
        yield DottedComposition()
        return
    for first in range(1, size + 1):
        for rest in dotted_compositions(size - first):
            yield DottedComposition((Part(first),) + rest.parts)
            yield DottedComposition((Part(first - 1, True),) + rest.parts)
