"""Sparse integer linear combinations of basis elements, and tensors of them."""

from __future__ import annotations

import enum
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

from .combinat import (
    DottedComposition,
    InvalidIndexError,
    SetSupercomposition,
    is_set_superpartition,
    is_superpermutation,
)

__all__ = ["Basis", "LinearCombination", "TensorCombination", "basis_element", "unit", "ParityError"]


class ParityError(ValueError):
    """A parity was requested of an inhomogeneous combination."""


class Basis(enum.Enum):
    M_nc = "Mnc"    # monomial basis of sNCQSym
    Q = "Q"         # Q-basis of sNCQSym
    m = "m"         # monomial basis of sNCSym
    MonF = "MonF"   # monomial basis of sFQSym
    M_c = "Mc"      # monomial basis of sQSym
    L = "L"         # fundamental basis of sQSym

    @property
    def letter(self) -> str:
        return self.value

    @property
    def commutative(self) -> bool:
        return self in (Basis.M_c, Basis.L)

    @classmethod
    def parse(cls, name: Union[str, "Basis"]) -> "Basis":
        if isinstance(name, Basis):
            return name
        for b in cls:
            if name in (b.value, b.name):
                return b
        raise ValueError(f"unknown basis {name!r}; expected one of {[b.value for b in cls]}")

    def check_index(self, index) -> None:
        if self.commutative:
            if not isinstance(index, DottedComposition):
                raise InvalidIndexError(f"basis {self.value} is indexed by dotted compositions, got {index!r}")
            return
        if not isinstance(index, SetSupercomposition):
            raise InvalidIndexError(f"basis {self.value} is indexed by set supercompositions, got {index!r}")
        if self is Basis.MonF and not is_superpermutation(index):
            raise InvalidIndexError(f"MonF is indexed by superpermutations; {index} is not one")
        if self is Basis.m and not is_set_superpartition(index):
            raise InvalidIndexError(f"m is indexed by set superpartitions; {index} is not one")

    def empty_index(self):
        return DottedComposition() if self.commutative else SetSupercomposition()


def _clean(terms: Iterable) -> dict:
    out: dict = {}
    for k, c in terms:
        c = out.get(k, 0) + c
        if c:
            out[k] = c
        else:
            out.pop(k, None)
    return out


def _fmt_coeff(c: int) -> str:
    return f"+{c}" if c > 0 else str(c)


class LinearCombination:
    """Immutable element of one basis, stored as ``{index: int}`` without zeros.

    Multiplying two combinations in the same basis uses that basis's product.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: Union[Basis, str], terms: Union[Mapping, Iterable] = (), *, check: bool = True):
        basis = Basis.parse(basis)
        items = terms.items() if isinstance(terms, Mapping) else terms
        cleaned = _clean((k, int(c)) for k, c in items)
        if check:
            for k in cleaned:
                basis.check_index(k)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_terms", MappingProxyType(cleaned))

    def __setattr__(self, *_):
        raise AttributeError("LinearCombination is immutable")

    @property
    def terms(self) -> Mapping:
        return self._terms

    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms.items(), key=lambda kv: str(kv[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, index) -> int:
        return self._terms.get(index, 0)

    coefficient = __getitem__

    def support(self) -> list:
        return sorted(self._terms, key=str)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinearCombination):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.basis is other.basis and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self._terms.items())))

    def _same(self, other: "LinearCombination"):
        if other.basis is not self.basis:
            raise ValueError(f"cannot combine {self.basis.value} with {other.basis.value}; convert first")

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._same(other)
        return LinearCombination(self.basis, list(self._terms.items()) + list(other._terms.items()), check=False)

    def __neg__(self) -> "LinearCombination":
        return LinearCombination(self.basis, {k: -c for k, c in self._terms.items()}, check=False)

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int) -> "LinearCombination":
        return LinearCombination(self.basis, {k: c * v for k, v in self._terms.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, LinearCombination):
            from .hopf import multiply

            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def parity(self) -> int:
        parities = {k.parity for k in self._terms}
        if len(parities) > 1:
            raise ParityError("combination mixes even and odd terms")
        return parities.pop() if parities else 0

    def counit(self) -> int:
        return self._terms.get(self.basis.empty_index(), 0)

    def to_text(self) -> str:
        return "".join(f"{_fmt_coeff(c)} * {self.basis.letter}[{k}]\n" for k, c in self) or "0\n"

    def to_structured(self) -> dict:
        return {
            "basis": self.basis.value,
            "terms": [[k.to_structured(), c] for k, c in self],
        }

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " ".join(f"{_fmt_coeff(c)}*{self.basis.letter}[{k}]" for k, c in self)

    def __repr__(self) -> str:
        return f"LinearCombination({self.basis.value}: {self})"


def basis_element(basis: Union[Basis, str], index, coeff: int = 1) -> LinearCombination:
    return LinearCombination(basis, {index: coeff})


def unit(basis: Union[Basis, str]) -> LinearCombination:
    basis = Basis.parse(basis)
    return LinearCombination(basis, {basis.empty_index(): 1})


class TensorCombination:
    """Integer combination of ``k``-fold tensors of basis elements of one basis.

    Keys are tuples of indices; every key has the same length ``arity``.
    """

    __slots__ = ("basis", "arity", "_terms")

    def __init__(self, basis: Union[Basis, str], terms: Union[Mapping, Iterable] = (), arity: int = 2):
        basis = Basis.parse(basis)
        items = terms.items() if isinstance(terms, Mapping) else terms
        cleaned = _clean((tuple(k), int(c)) for k, c in items)
        for k in cleaned:
            if len(k) != arity:
                raise ValueError(f"tensor key {k} does not have arity {arity}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_terms", MappingProxyType(cleaned))

    def __setattr__(self, *_):
        raise AttributeError("TensorCombination is immutable")

    @property
    def terms(self) -> Mapping:
        return self._terms

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=lambda kv: tuple(str(x) for x in kv[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key) -> int:
        return self._terms.get(tuple(key), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, TensorCombination):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.basis is other.basis and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self._terms.items())))

    def __add__(self, other: "TensorCombination") -> "TensorCombination":
        if other.basis is not self.basis or other.arity != self.arity:
            raise ValueError("tensor combinations of different shapes")
        return TensorCombination(self.basis, list(self._terms.items()) + list(other._terms.items()), self.arity)

    def __neg__(self) -> "TensorCombination":
        return TensorCombination(self.basis, {k: -c for k, c in self._terms.items()}, self.arity)

    def __sub__(self, other: "TensorCombination") -> "TensorCombination":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TensorCombination(self.basis, {k: other * c for k, c in self._terms.items()}, self.arity)
        if isinstance(other, TensorCombination):
            from .hopf import super_tensor_mul

            return super_tensor_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def to_text(self) -> str:
        letter = self.basis.letter
        lines = []
        for key, c in self:
            factors = " # ".join(f"{letter}[{k}]" for k in key)
            lines.append(f"{_fmt_coeff(c)} * {factors}\n")
        return "".join(lines) or "0\n"

    def to_structured(self) -> dict:
        return {
            "basis": self.basis.value,
            "arity": self.arity,
            "terms": [[[k.to_structured() for k in key], c] for key, c in self],
        }

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        letter = self.basis.letter
        return " ".join(
            f"{_fmt_coeff(c)}*" + "#".join(f"{letter}[{k}]" for k in key) for key, c in self
        )

    def __repr__(self) -> str:
        return f"TensorCombination({self.basis.value}: {self})"
