"""Total multiplicative monomial orders over named variables.

Three families are supported: lex, grlex and grevlex, each parameterized by a
priority listing the variables from largest to smallest.  Rank reverse
lexicographic orders are realized as grevlex with a rank-sorted priority;
the ideals handled here are homogeneous, so graded and ungraded reverse lex
pick the same initial terms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .lattice import Lattice, NotPure
from .monomials import Monomial

FAMILIES = ("lex", "grlex", "grevlex")

LESS, EQUAL, GREATER = -1, 0, 1

ALL_PERMS_LIMIT = 8


class UnknownVariable(ValueError):
    pass


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured desk-scale budget."""


@dataclass(frozen=True)
class MonomialOrderSpec:
    """A monomial order family plus a variable priority (largest first)."""

    family: str
    priority: tuple[str, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown order family {self.family!r}")
        if len(set(self.priority)) != len(self.priority):
            raise ValueError("priority lists a variable twice")

    def exponent_vector(self, m: Monomial) -> tuple[int, ...]:
        vec = [0] * len(self.priority)
        pos = {v: k for k, v in enumerate(self.priority)}
        for var, e in m.exps:
            k = pos.get(var)
            if k is None:
                raise UnknownVariable(f"variable {var!r} not covered by the order")
            vec[k] = e
        return tuple(vec)

    def key(self, m: Monomial):
        """Sort key: ascending keys list monomials from smallest to largest."""
        vec = self.exponent_vector(m)
        return vector_key(self.family, vec)


def vector_key(family: str, vec: Sequence[int]):
    if family == "lex":
        return tuple(vec)
    if family == "grlex":
        return (sum(vec), tuple(vec))
    # grevlex: higher degree wins, then the last differing priority variable
    # decides with the smaller exponent winning.
    return (sum(vec), tuple(-e for e in reversed(vec)))


def compare(spec: MonomialOrderSpec, m1: Monomial, m2: Monomial) -> int:
    """Return GREATER, EQUAL or LESS for m1 versus m2 under the spec."""
    k1, k2 = spec.key(m1), spec.key(m2)
    if k1 == k2:
        return EQUAL
    return GREATER if k1 > k2 else LESS


def rank_revlex(lattice: Lattice, tiebreak: Iterable[str] | None = None) -> MonomialOrderSpec:
    """Rank reverse lexicographic order: priority descending in rank.

    Ties within a rank level follow the tiebreak sequence; elements missing
    from the tiebreak keep their lattice order after the listed ones.
    """
    if lattice.rank is None:
        raise NotPure("rank reverse lexicographic orders need a pure lattice")
    listed = list(tiebreak) if tiebreak is not None else []
    if len(set(listed)) != len(listed):
        raise ValueError("tiebreak lists an element twice")
    for e in listed:
        lattice.index(e)
    pos = {e: k for k, e in enumerate(listed)}
    base = len(listed)
    for k, e in enumerate(lattice.elements):
        pos.setdefault(e, base + k)
    priority = sorted(lattice.elements, key=lambda e: (-lattice.rank[e], pos[e]))
    return MonomialOrderSpec("grevlex", tuple(priority))


def enumerate_order_specs(variables: Sequence[str],
                          families: Sequence[str] = ("lex", "grevlex"),
                          mode: str = "all",
                          count: int | None = None,
                          seed: int = 0,
                          force: bool = False) -> Iterator[MonomialOrderSpec]:
    """Deterministic stream of order specs.

    mode="all" yields every family x permutation pair (len(families) * n!
    specs), refusing more than ALL_PERMS_LIMIT variables unless forced;
    mode="sample" yields `count` seeded draws from the same space.
    """
    variables = tuple(variables)
    families = tuple(families)
    for fam in families:
        if fam not in FAMILIES:
            raise ValueError(f"unknown order family {fam!r}")
    if not families:
        raise ValueError("no order families given")
    if mode == "all":
        if len(variables) > ALL_PERMS_LIMIT and not force:
            raise BudgetError(
                f"all-permutations sweep over {len(variables)} variables refused; "
                "use sampling or force=True")
        for fam in families:
            for perm in permutations(variables):
                yield MonomialOrderSpec(fam, perm)
    elif mode == "sample":
        if count is None or count < 0:
            raise ValueError("sample mode needs a nonnegative count")
        rng = random.Random(seed)
        for _ in range(count):
            fam = families[rng.randrange(len(families))]
            perm = tuple(rng.sample(variables, len(variables)))
            yield MonomialOrderSpec(fam, perm)
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")


def spec_to_string(spec: MonomialOrderSpec) -> str:
    return f"{spec.family}:{','.join(spec.priority)}"


def spec_from_string(text: str) -> MonomialOrderSpec:
    """Parse family:v1,v2,... with variables listed from largest to smallest."""
    family, sep, rest = text.partition(":")
    if not sep or not rest:
        raise ValueError(f"order spec {text!r} is not of the form family:v1,v2,...")
    if family not in FAMILIES:
        raise ValueError(f"unknown order family {family!r}")
    return MonomialOrderSpec(family, tuple(rest.split(",")))
