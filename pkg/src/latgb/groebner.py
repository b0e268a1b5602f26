"""Buchberger engine specialized to pure-difference binomials.

S-binomials and reductions of differences of monomials stay differences of
monomials with coefficients +-1, so the computation is monomial rewriting and
no coefficient field is ever materialized.  Exponent vectors indexed by the
order's priority are used internally; the public surface speaks Monomials.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .lattice import Lattice, basic_binomials
from .monomials import Binomial, Monomial
from .orders import MonomialOrderSpec, UnknownVariable, spec_to_string, vector_key


class ZeroBinomial(ValueError):
    """Raised when an operation needs a binomial with distinct sides."""


@dataclass(frozen=True)
class OrientedBinomial:
    """lead - tail with lead larger under the active order."""

    lead: Monomial
    tail: Monomial

    @property
    def degree(self) -> int:
        return self.lead.degree

    def as_binomial(self) -> Binomial:
        return Binomial(self.lead, self.tail)

    def __str__(self) -> str:
        return f"{self.lead} - {self.tail}"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal by its minimal generators (a divisibility antichain)."""

    min_gens: tuple[Monomial, ...]

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.min_gens)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.min_gens)


@dataclass(frozen=True)
class MembershipCertificate:
    """Steps (multiplier, binomial, sign) whose signed sum is the certified binomial."""

    steps: tuple[tuple[Monomial, Binomial, int], ...]

    def expansion(self) -> dict[Monomial, int]:
        acc: dict[Monomial, int] = {}
        for mult, g, sign in self.steps:
            for mono, coeff in ((g.lhs, sign), (g.rhs, -sign)):
                m = mult * mono
                c = acc.get(m, 0) + coeff
                if c:
                    acc[m] = c
                else:
                    acc.pop(m, None)
        return acc

    def matches(self, b: Binomial) -> bool:
        expected: dict[Monomial, int] = {}
        if b.lhs != b.rhs:
            expected = {b.lhs: 1, b.rhs: -1}
        return self.expansion() == expected


@dataclass(frozen=True)
class ReducedGroebnerBasis:
    spec: MonomialOrderSpec
    elements: tuple[OrientedBinomial, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def max_degree(self) -> int:
        return max((e.degree for e in self.elements), default=0)

    def leads(self) -> tuple[Monomial, ...]:
        return tuple(e.lead for e in self.elements)

    def render_lines(self) -> list[str]:
        return [render_binomial(e.lead, e.tail, self.spec.priority) for e in self.elements]


def render_monomial(m: Monomial, priority: Sequence[str]) -> str:
    """Concatenated variables with ^k for exponents > 1, in priority order."""
    if m.is_one:
        return "1"
    pos = {v: k for k, v in enumerate(priority)}
    parts = sorted(m.exps, key=lambda ve: pos.get(ve[0], len(pos)))
    return "".join(v if e == 1 else f"{v}^{e}" for v, e in parts)


def render_binomial(lhs: Monomial, rhs: Monomial, priority: Sequence[str]) -> str:
    return f"{render_monomial(lhs, priority)} - {render_monomial(rhs, priority)}"


# ---------------------------------------------------------------------------
# Vector-level engine


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vmask(v) -> int:
    mask = 0
    for k, e in enumerate(v):
        if e:
            mask |= 1 << k
    return mask


class _Entry:
    __slots__ = ("lead", "tail", "nz", "mask", "deg", "prov")

    def __init__(self, lead, tail, prov=None):
        self.lead = lead
        self.tail = tail
        self.nz = tuple((k, e) for k, e in enumerate(lead) if e)
        self.mask = _vmask(lead)
        self.deg = sum(lead)
        self.prov = prov


class _Engine:
    def __init__(self, spec: MonomialOrderSpec):
        self.spec = spec
        self.vars = spec.priority
        self.pos = {v: k for k, v in enumerate(spec.priority)}
        self.n = len(spec.priority)
        fam = spec.family
        self.key = lambda vec: vector_key(fam, vec)

    def vec(self, m: Monomial):
        v = [0] * self.n
        for var, e in m.exps:
            k = self.pos.get(var)
            if k is None:
                raise UnknownVariable(f"variable {var!r} not covered by the order")
            v[k] = e
        return tuple(v)

    def unvec(self, v) -> Monomial:
        return Monomial.of({var: e for var, e in zip(self.vars, v) if e})


def _reduce_monomial(u, entries, steps=None):
    """Rewrite u by lead -> tail of the entries until no lead divides it."""
    changed = True
    while changed:
        changed = False
        udeg = sum(u)
        umask = _vmask(u)
        for t, ent in enumerate(entries):
            if ent.deg > udeg or ent.mask & ~umask:
                continue
            divisible = True
            for k, e in ent.nz:
                if u[k] < e:
                    divisible = False
                    break
            if divisible:
                mult = tuple(ue - le for ue, le in zip(u, ent.lead))
                u = _vadd(mult, ent.tail)
                if steps is not None:
                    steps.append((mult, t))
                changed = True
                break
    return u


def _scale_prov(prov, mult, sign):
    return tuple((_vadd(mv, mult), gi, s * sign) for mv, gi, s in prov)


def _run_buchberger(generators: Sequence[Binomial], spec: MonomialOrderSpec,
                    strategy: str, track: bool, trace: list | None):
    if strategy not in ("minlcm", "fifo"):
        raise ValueError(f"unknown pair-selection strategy {strategy!r}")
    eng = _Engine(spec)
    key = eng.key
    entries: list[_Entry] = []
    zero_mult = (0,) * eng.n

    for gi, g in enumerate(generators):
        if g.lhs == g.rhs:
            raise ZeroBinomial("generators must be nonzero binomials")
        u, v = eng.vec(g.lhs), eng.vec(g.rhs)
        if key(u) > key(v):
            lead, tail, sgn = u, v, 1
        else:
            lead, tail, sgn = v, u, -1
        prov = ((zero_mult, gi, sgn),) if track else None
        entries.append(_Entry(lead, tail, prov))
        if trace is not None:
            trace.append(Binomial(eng.unvec(lead), eng.unvec(tail)))

    heap: list = []
    fifo: deque = deque()
    counter = 0

    def push_pairs(j):
        nonlocal counter
        for i in range(j):
            if strategy == "fifo":
                fifo.append((i, j))
            else:
                lcm = tuple(max(a, b) for a, b in
                            zip(entries[i].lead, entries[j].lead))
                heapq.heappush(heap, (sum(lcm), lcm, i, j))
                counter += 1

    for j in range(len(entries)):
        push_pairs(j)

    while heap or fifo:
        if strategy == "fifo":
            i, j = fifo.popleft()
        else:
            _, _, i, j = heapq.heappop(heap)
        fi, fj = entries[i], entries[j]
        if not fi.mask & fj.mask:
            continue  # product criterion: coprime leads reduce to zero
        lcm = tuple(max(a, b) for a, b in zip(fi.lead, fj.lead))
        mult_i = tuple(l - a for l, a in zip(lcm, fi.lead))
        mult_j = tuple(l - b for l, b in zip(lcm, fj.lead))
        u = _vadd(mult_j, fj.tail)
        v = _vadd(mult_i, fi.tail)
        if u == v:
            continue
        if trace is not None:
            trace.append(Binomial(eng.unvec(u), eng.unvec(v)))
        steps_u: list = []
        steps_v: list = []
        u = _reduce_monomial(u, entries, steps_u if track else None)
        v = _reduce_monomial(v, entries, steps_v if track else None)
        if u == v:
            continue
        prov = None
        if track:
            prov = list(_scale_prov(fi.prov, mult_i, 1))
            prov += _scale_prov(fj.prov, mult_j, -1)
            for mult, t in steps_u:
                prov += _scale_prov(entries[t].prov, mult, -1)
            for mult, t in steps_v:
                prov += _scale_prov(entries[t].prov, mult, 1)
        if key(u) > key(v):
            lead, tail = u, v
        else:
            lead, tail = v, u
            if track:
                prov = [(mv, gi, -s) for mv, gi, s in prov]
        entries.append(_Entry(lead, tail, tuple(prov) if track else None))
        if trace is not None:
            trace.append(Binomial(eng.unvec(lead), eng.unvec(tail)))
        push_pairs(len(entries) - 1)

    # Minimalize: sorting by (degree, key) puts every potential divisor first.
    order = sorted(range(len(entries)),
                   key=lambda t: (entries[t].deg, key(entries[t].lead)))
    kept: list[_Entry] = []
    for t in order:
        ent = entries[t]
        redundant = False
        for other in kept:
            if other.deg > ent.deg:
                break
            if not other.mask & ~ent.mask and \
                    all(ent.lead[k] >= e for k, e in other.nz):
                redundant = True
                break
        if not redundant:
            kept.append(ent)

    # Autoreduce tails against the minimal leads.
    final: list[_Entry] = []
    for ent in kept:
        steps: list = []
        tail = _reduce_monomial(ent.tail, kept, steps if track else None)
        prov = ent.prov
        if track:
            for mult, t in steps:
                prov = tuple(prov) + _scale_prov(kept[t].prov, mult, 1)
        final.append(_Entry(ent.lead, tail, prov))

    final.sort(key=lambda e: (e.deg, key(e.lead)))
    return eng, final


def buchberger(generators: Iterable[Binomial], spec: MonomialOrderSpec, *,
               strategy: str = "minlcm", trace: list | None = None) -> ReducedGroebnerBasis:
    """Reduced Groebner basis of the ideal generated by pure-difference binomials.

    The result is independent of the pair-selection strategy ("minlcm", the
    degree-minimal-lcm normal strategy, or "fifo"); every intermediate element
    stays a pure difference.  Pass a list as `trace` to record all raw
    S-binomials and appended elements.
    """
    generators = list(generators)
    eng, final = _run_buchberger(generators, spec, strategy, False, trace)
    gb = ReducedGroebnerBasis(spec, tuple(
        OrientedBinomial(eng.unvec(e.lead), eng.unvec(e.tail)) for e in final))
    _check_generators_vanish(generators, final, eng)
    return gb


def buchberger_with_certificates(generators: Iterable[Binomial], spec: MonomialOrderSpec, *,
                                 strategy: str = "minlcm"):
    """Reduced basis plus, per element, a certificate over the input generators."""
    generators = list(generators)
    eng, final = _run_buchberger(generators, spec, strategy, True, None)
    gb = ReducedGroebnerBasis(spec, tuple(
        OrientedBinomial(eng.unvec(e.lead), eng.unvec(e.tail)) for e in final))
    certs = tuple(
        MembershipCertificate(_prov_to_steps(e.prov, generators, eng)) for e in final)
    _check_generators_vanish(generators, final, eng)
    return gb, certs


def _prov_to_steps(prov, generators, eng):
    combined: dict[tuple, int] = {}
    for mult, gi, sign in prov:
        combined[(mult, gi)] = combined.get((mult, gi), 0) + sign
    steps = []
    for (mult, gi), coeff in sorted(combined.items()):
        sign = 1 if coeff > 0 else -1
        for _ in range(abs(coeff)):
            steps.append((eng.unvec(mult), generators[gi], sign))
    return tuple(steps)


def _check_generators_vanish(generators, final, eng):
    for g in generators:
        u = _reduce_monomial(eng.vec(g.lhs), final)
        v = _reduce_monomial(eng.vec(g.rhs), final)
        if u != v:
            raise AssertionError("generator does not reduce to zero against its basis")


def orient(b: Binomial, spec: MonomialOrderSpec) -> OrientedBinomial:
    """Order the two sides of a binomial so the spec-larger one leads."""
    if b.lhs == b.rhs:
        raise ZeroBinomial("cannot orient the zero binomial")
    if spec.key(b.lhs) > spec.key(b.rhs):
        return OrientedBinomial(b.lhs, b.rhs)
    return OrientedBinomial(b.rhs, b.lhs)


def s_binomial(f: OrientedBinomial, g: OrientedBinomial,
               spec: MonomialOrderSpec) -> Binomial | None:
    """S-binomial lcm/lead(f) * f - lcm/lead(g) * g, or None when it cancels."""
    lcm = f.lead.lcm(g.lead)
    lhs = (lcm / g.lead) * g.tail
    rhs = (lcm / f.lead) * f.tail
    if lhs == rhs:
        return None
    return Binomial(lhs, rhs)


def _entries_from_basis(basis, eng):
    if isinstance(basis, ReducedGroebnerBasis):
        basis = basis.elements
    entries = []
    originals = []
    for ob in basis:
        entries.append(_Entry(eng.vec(ob.lead), eng.vec(ob.tail)))
        originals.append(ob)
    return entries, originals


def normal_form(b: Binomial | OrientedBinomial, basis, spec: MonomialOrderSpec, *,
                certificate: bool = False):
    """Fully reduce a binomial modulo oriented basis elements.

    Returns an OrientedBinomial with no monomial divisible by any basis lead,
    or None when the binomial reduces to zero.  With certificate=True, also
    returns a MembershipCertificate whose steps sum to the input minus the
    returned remainder (exactly the input when the result is zero).
    """
    eng = _Engine(spec)
    entries, originals = _entries_from_basis(basis, eng)
    if isinstance(b, OrientedBinomial):
        u0, v0 = b.lead, b.tail
    else:
        u0, v0 = b.lhs, b.rhs
    steps_u: list = []
    steps_v: list = []
    u = _reduce_monomial(eng.vec(u0), entries, steps_u if certificate else None)
    v = _reduce_monomial(eng.vec(v0), entries, steps_v if certificate else None)
    result = None
    if u != v:
        if eng.key(u) > eng.key(v):
            result = OrientedBinomial(eng.unvec(u), eng.unvec(v))
        else:
            result = OrientedBinomial(eng.unvec(v), eng.unvec(u))
    if not certificate:
        return result
    steps = []
    for mult, t in steps_u:
        steps.append((eng.unvec(mult), originals[t].as_binomial(), 1))
    for mult, t in steps_v:
        steps.append((eng.unvec(mult), originals[t].as_binomial(), -1))
    return result, MembershipCertificate(tuple(steps))


def membership_certificate(b: Binomial, generators: Iterable[Binomial],
                           spec: MonomialOrderSpec) -> MembershipCertificate | None:
    """Certificate writing b as a signed monomial combination of the generators.

    Computes a tracked Groebner basis, reduces b against it and expands the
    reduction steps through each basis element's own provenance.  Returns None
    when b is not in the ideal.
    """
    generators = list(generators)
    eng, final = _run_buchberger(generators, spec, "minlcm", True, None)
    steps_u: list = []
    steps_v: list = []
    u = _reduce_monomial(eng.vec(b.lhs), final, steps_u)
    v = _reduce_monomial(eng.vec(b.rhs), final, steps_v)
    if u != v:
        return None
    prov: list = []
    for mult, t in steps_u:
        prov += _scale_prov(final[t].prov, mult, 1)
    for mult, t in steps_v:
        prov += _scale_prov(final[t].prov, mult, -1)
    return MembershipCertificate(_prov_to_steps(prov, generators, eng))


def initial_ideal(gb: ReducedGroebnerBasis) -> MonomialIdeal:
    """Minimal generators of the initial ideal: the leads of a reduced basis."""
    leads = gb.leads()
    for a, b in ((x, y) for x in leads for y in leads if x != y):
        assert not a.divides(b), "reduced basis leads must form an antichain"
    return MonomialIdeal(leads)


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return ideal.is_squarefree


def is_quadratic(gb: ReducedGroebnerBasis) -> bool:
    return all(e.lead.degree == 2 and e.tail.degree == 2 for e in gb.elements)


@dataclass(frozen=True)
class LatticeIdealReport:
    spec: MonomialOrderSpec
    gb: ReducedGroebnerBasis
    initial_ideal: MonomialIdeal
    squarefree: bool
    quadratic: bool
    max_degree: int

    def to_json_dict(self) -> dict:
        priority = self.spec.priority
        return {
            "order": spec_to_string(self.spec),
            "gb": self.gb.render_lines(),
            "min_gens": [render_monomial(m, priority) for m in self.initial_ideal.min_gens],
            "squarefree": self.squarefree,
            "quadratic": self.quadratic,
            "max_degree": self.max_degree,
        }


def lattice_ideal_report(lattice: Lattice, spec: MonomialOrderSpec, *,
                         strategy: str = "minlcm") -> LatticeIdealReport:
    """Bundle the per-order verdicts for the lattice ideal of `lattice`."""
    gb = buchberger(basic_binomials(lattice), spec, strategy=strategy)
    ideal = initial_ideal(gb)
    return LatticeIdealReport(spec, gb, ideal, ideal.is_squarefree,
                              is_quadratic(gb), gb.max_degree)


def standard_monomial_counts(ideal: MonomialIdeal, variables: Sequence[str],
                             max_degree: int) -> list[int]:
    """Number of monomials of each degree 0..max_degree outside the ideal."""
    counts = []
    for d in range(max_degree + 1):
        total = 0
        for combo in combinations_with_replacement(variables, d):
            if not ideal.contains(Monomial.product(combo)):
                total += 1
        counts.append(total)
    return counts
