"""Monomials over named variables, and pure differences of two monomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Monomial:
    """A power product stored as sorted (variable, exponent) pairs.

    Zero exponents are never stored, so equal monomials compare equal and
    hash equal regardless of how they were assembled.
    """

    exps: tuple[tuple[str, int], ...] = ()

    @staticmethod
    def of(source: Mapping[str, int] | Iterable[tuple[str, int]] = ()) -> "Monomial":
        items = source.items() if isinstance(source, Mapping) else source
        acc: dict[str, int] = {}
        for var, e in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e} for variable {var!r}")
            if e:
                acc[var] = acc.get(var, 0) + e
        return Monomial(tuple(sorted(acc.items())))

    @staticmethod
    def product(variables: Iterable[str]) -> "Monomial":
        """Monomial formed by multiplying the given variables (repeats allowed)."""
        acc: dict[str, int] = {}
        for var in variables:
            acc[var] = acc.get(var, 0) + 1
        return Monomial(tuple(sorted(acc.items())))

    @cached_property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def is_one(self) -> bool:
        return not self.exps

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def exponent(self, var: str) -> int:
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.exps)

    def as_dict(self) -> dict[str, int]:
        return dict(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        acc = dict(self.exps)
        for var, e in other.exps:
            acc[var] = acc.get(var, 0) + e
        return Monomial(tuple(sorted(acc.items())))

    def divides(self, other: "Monomial") -> bool:
        his = dict(other.exps)
        return all(his.get(var, 0) >= e for var, e in self.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        acc = dict(self.exps)
        for var, e in other.exps:
            left = acc.get(var, 0) - e
            if left < 0:
                raise ValueError(f"{other} does not divide {self}")
            if left:
                acc[var] = left
            else:
                del acc[var]
        return Monomial(tuple(sorted(acc.items())))

    def lcm(self, other: "Monomial") -> "Monomial":
        acc = dict(self.exps)
        for var, e in other.exps:
            if acc.get(var, 0) < e:
                acc[var] = e
        return Monomial(tuple(sorted(acc.items())))

    def coprime(self, other: "Monomial") -> bool:
        his = dict(other.exps)
        return all(var not in his for var, _ in self.exps)

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "".join(v if e == 1 else f"{v}^{e}" for v, e in self.exps)


ONE = Monomial()


@dataclass(frozen=True)
class Binomial:
    """The pure difference lhs - rhs of two monomials."""

    lhs: Monomial
    rhs: Monomial

    @property
    def is_zero(self) -> bool:
        return self.lhs == self.rhs

    @property
    def is_homogeneous(self) -> bool:
        return self.lhs.degree == self.rhs.degree

    @property
    def degree(self) -> int:
        return max(self.lhs.degree, self.rhs.degree)

    def normalized(self) -> "Binomial":
        """Sign-insensitive representative: the side with the smaller key first."""
        if self.rhs.exps < self.lhs.exps:
            return Binomial(self.rhs, self.lhs)
        return self

    def __str__(self) -> str:
        return f"{self.lhs} - {self.rhs}"
