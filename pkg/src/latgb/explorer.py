"""Desk-scale searches: order sweeps, lattice enumeration up to isomorphism,
and the scans behind the squarefree and quadratic conjectures.

Lattices are enumerated by generating all posets on the non-extremal elements
(every bounded poset is such a poset with a bottom and top attached), keeping
those where all pairs have joins, and deduplicating by a canonical form: the
minimal bit-matrix encoding over all permutations compatible with a structural
invariant partition.
"""

from __future__ import annotations

import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .groebner import lattice_ideal_report
from .lattice import (Lattice, basic_binomials, build_lattice, catalog,
                      cut_edges, is_distributive, is_modular)
from .orders import (BudgetError, MonomialOrderSpec, enumerate_order_specs,
                     rank_revlex, spec_to_string)

MAX_ENUM_ELEMENTS = 8
FULL_SWEEP_VARS = 6
DEFAULT_SAMPLE = 500


@dataclass(frozen=True)
class ScanRecord:
    lattice_id: str
    order_spec: str
    squarefree: bool
    quadratic: bool
    max_degree: int
    gb_size: int

    def to_json_dict(self) -> dict:
        return {"lattice_id": self.lattice_id, "order": self.order_spec,
                "squarefree": self.squarefree, "quadratic": self.quadratic,
                "max_degree": self.max_degree, "gb_size": self.gb_size}


# ---------------------------------------------------------------------------
# Canonical forms


def _covers_from_upmasks(up: Sequence[int]) -> list[tuple[int, int]]:
    n = len(up)
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if up[i] >> j & 1:
                down[j] |= 1 << i
    covers = []
    for i in range(n):
        for j in range(n):
            if i != j and up[i] >> j & 1:
                if not up[i] & down[j] & ~(1 << i) & ~(1 << j):
                    covers.append((i, j))
    return covers


def _canonical_from_upmasks(up: Sequence[int]) -> bytes:
    n = len(up)
    covers = _covers_from_upmasks(up)
    ups = [[] for _ in range(n)]
    downs = [[] for _ in range(n)]
    for i, j in covers:
        ups[i].append(j)
        downs[j].append(i)
    # longest chains from below / above via repeated relaxation over covers
    height = [0] * n
    changed = True
    while changed:
        changed = False
        for i, j in covers:
            if height[j] < height[i] + 1:
                height[j] = height[i] + 1
                changed = True
    depth = [0] * n
    changed = True
    while changed:
        changed = False
        for i, j in covers:
            if depth[i] < depth[j] + 1:
                depth[i] = depth[j] + 1
                changed = True

    invariant = []
    for i in range(n):
        down_size = sum(1 for k in range(n) if up[k] >> i & 1)
        invariant.append((height[i], depth[i], down_size, up[i].bit_count(),
                          len(downs[i]), len(ups[i])))
    groups: dict[tuple, list[int]] = {}
    for i, inv in enumerate(invariant):
        groups.setdefault(inv, []).append(i)
    ordered_groups = [groups[k] for k in sorted(groups)]
    budget = 1
    for g in ordered_groups:
        for t in range(2, len(g) + 1):
            budget *= t
        if budget > 2_000_000:
            raise BudgetError("canonical form search space too large")

    best: int | None = None
    for combo in product(*[permutations(g) for g in ordered_groups]):
        perm = [i for block in combo for i in block]
        code = 0
        for a in perm:
            row_mask = up[a]
            for b in perm:
                code = code << 1 | (row_mask >> b & 1)
        if best is None or code < best:
            best = code
    return bytes([n]) + best.to_bytes((n * n + 7) // 8, "big")


def canonical_form(lattice: Lattice) -> bytes:
    up = [lattice.up_mask(i) for i in range(len(lattice))]
    return _canonical_from_upmasks(up)


def lattice_id(lattice: Lattice) -> str:
    """Digest of the canonical form; invariant under element renaming."""
    return hashlib.sha256(canonical_form(lattice)).hexdigest()[:16]


def _lattice_from_canonical(blob: bytes) -> Lattice:
    n = blob[0]
    code = int.from_bytes(blob[1:], "big")
    bits = n * n
    up = [0] * n
    for a in range(n):
        for b in range(n):
            if code >> (bits - 1 - (a * n + b)) & 1:
                up[a] |= 1 << b
    names = [f"v{i}" for i in range(n)]
    covers = [(names[i], names[j]) for i, j in _covers_from_upmasks(up)]
    return build_lattice(names, covers)


# ---------------------------------------------------------------------------
# Lattice enumeration


def _downset_masks(k: int, strict_down: Sequence[int]) -> list[int]:
    out = []
    for mask in range(1 << k):
        ok = True
        probe = mask
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            if strict_down[i] & ~mask:
                ok = False
                break
            probe ^= low
        if ok:
            out.append(mask)
    return out


def _upset_masks(k: int, strict_up: Sequence[int], allowed: int) -> list[int]:
    out = []
    sub = allowed
    while True:
        mask = sub
        ok = True
        probe = mask
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            if strict_up[i] & ~mask:
                ok = False
                break
            probe ^= low
        if ok:
            out.append(mask)
        if sub == 0:
            break
        sub = (sub - 1) & allowed
    return out


def _middle_posets(m: int, strategy: str) -> Iterator[tuple[int, ...]]:
    """All labeled strict orders on 0..m-1, as up-masks including the self bit.

    strategy "posets" assigns each new element an arbitrary (downset, upset)
    pair; "growtop" always inserts a new maximal element, so it enumerates
    each poset once per compatible labeling and relies on canonical-form
    deduplication downstream.
    """
    if strategy not in ("posets", "growtop"):
        raise ValueError(f"unknown enumeration strategy {strategy!r}")
    states = [((), ())]  # (strict_up, strict_down) masks per element
    for k in range(m):
        new_states = []
        for strict_up, strict_down in states:
            downsets = _downset_masks(k, strict_down)
            for dmask in downsets:
                if strategy == "growtop":
                    umasks = [0]
                else:
                    umasks = _upset_masks(k, strict_up, ((1 << k) - 1) & ~dmask)
                for umask in umasks:
                    ok = True
                    probe = umask
                    while probe:
                        low = probe & -probe
                        u = low.bit_length() - 1
                        if dmask & ~strict_down[u]:
                            ok = False
                            break
                        probe ^= low
                    if not ok:
                        continue
                    up2 = []
                    down2 = []
                    for i in range(k):
                        iu = strict_up[i] | (1 << k if dmask >> i & 1 else 0)
                        idn = strict_down[i] | (1 << k if umask >> i & 1 else 0)
                        up2.append(iu)
                        down2.append(idn)
                    up2.append(umask)
                    down2.append(dmask)
                    new_states.append((tuple(up2), tuple(down2)))
        states = new_states
    for strict_up, strict_down in states:
        yield tuple(strict_up[i] | 1 << i for i in range(m))


def _bounded_lattice_upmasks(middle_up: tuple[int, ...]) -> list[int] | None:
    """Attach bottom and top to a middle poset; None unless joins/meets exist."""
    m = len(middle_up)
    top = m + 1
    up = [middle_up[i] | 1 << top for i in range(m)]
    up.append((1 << (m + 2)) - 1)  # bottom sits below everything
    up.append(1 << top)
    down = [0] * (m + 2)
    for i in range(m + 2):
        for j in range(m + 2):
            if up[i] >> j & 1:
                down[j] |= 1 << i

    middle_mask = (1 << m) - 1
    by_up = {up[i] & middle_mask: i for i in range(m)}
    by_down = {down[i] & middle_mask: i for i in range(m)}
    if len(by_up) != m or len(by_down) != m:
        return None
    for i in range(m):
        for j in range(i + 1, m):
            common_up = up[i] & up[j] & middle_mask
            if common_up and common_up not in by_up:
                return None
            common_down = down[i] & down[j] & middle_mask
            if common_down and common_down not in by_down:
                return None
    return up


def enumerate_lattices(max_elements: int, *, strategy: str = "posets") -> Iterator[Lattice]:
    """Every isomorphism class with up to max_elements elements, exactly once.

    Classes are emitted in increasing size and canonical-form order, with
    elements canonically named v0..v{n-1}.
    """
    if max_elements < 1:
        raise ValueError("max_elements must be positive")
    if max_elements > MAX_ENUM_ELEMENTS:
        raise BudgetError(
            f"lattice enumeration beyond {MAX_ENUM_ELEMENTS} elements refused")
    for n in range(1, max_elements + 1):
        if n == 1:
            yield build_lattice(["v0"], [])
            continue
        seen: set[bytes] = set()
        for middle in _middle_posets(n - 2, strategy):
            up = _bounded_lattice_upmasks(middle)
            if up is None:
                continue
            seen.add(_canonical_from_upmasks(up))
        for blob in sorted(seen):
            yield _lattice_from_canonical(blob)


# ---------------------------------------------------------------------------
# Order sweeps


def _policy_specs(variables: Sequence[str], families: Sequence[str], mode: str,
                  count: int, seed: int, force: bool) -> Iterator[MonomialOrderSpec]:
    if mode == "default":
        if len(variables) <= FULL_SWEEP_VARS:
            return enumerate_order_specs(variables, families, "all", force=force)
        return enumerate_order_specs(variables, families, "sample",
                                     count=count, seed=seed)
    if mode == "all":
        return enumerate_order_specs(variables, families, "all", force=force)
    if mode == "sample":
        return enumerate_order_specs(variables, families, "sample",
                                     count=count, seed=seed)
    raise ValueError(f"unknown sweep mode {mode!r}")


def scan_orders(lattice: Lattice, families: Sequence[str] = ("lex", "grevlex"),
                mode: str = "default", count: int = DEFAULT_SAMPLE, seed: int = 0,
                force: bool = False) -> list[ScanRecord]:
    """One record per order spec from the sweep policy, in stream order."""
    lid = lattice_id(lattice)
    out = []
    for spec in _policy_specs(lattice.elements, families, mode, count, seed, force):
        rep = lattice_ideal_report(lattice, spec)
        out.append(ScanRecord(lid, spec_to_string(spec), rep.squarefree,
                              rep.quadratic, rep.max_degree, len(rep.gb)))
    return out


def _rank_revlex_samples(lattice: Lattice, count: int, seed: int) -> list[MonomialOrderSpec]:
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        tiebreak = rng.sample(lattice.elements, len(lattice.elements))
        specs.append(rank_revlex(lattice, tiebreak))
    return specs


# ---------------------------------------------------------------------------
# Conjecture scans


@dataclass(frozen=True)
class SquarefreeScan:
    """Sweep evidence for: non-distributive modular lattice ideals are never
    squarefree-initial.  A violation is a (lattice_id, order) pair whose
    initial ideal came out squarefree; finding one is a result, not an error."""

    violations: tuple[tuple[str, str], ...]
    nonpure_violations: tuple[tuple[str, str], ...]
    lattices_scanned: int
    specs_checked: int


def _squarefree_sweep_one(args) -> tuple[bool, list[tuple[str, str]], int]:
    elements, covers, families, mode, count, seed, force = args
    lattice = build_lattice(elements, covers)
    lid = lattice_id(lattice)
    specs = list(_policy_specs(lattice.elements, families, mode, count, seed, force))
    sampled = len(lattice.elements) > FULL_SWEEP_VARS or mode == "sample"
    if lattice.is_pure and sampled:
        # Sampled sweeps may miss every rank reverse lex order, which the
        # squarefree characterization is really about; add a few directly.
        specs.extend(_rank_revlex_samples(lattice, 20, seed + 1))
    hits = []
    for spec in specs:
        rep = lattice_ideal_report(lattice, spec)
        if rep.squarefree:
            hits.append((lid, spec_to_string(spec)))
    return lattice.is_pure, hits, len(specs)


def squarefree_conjecture_scan(max_elements: int,
                               families: Sequence[str] = ("lex", "grevlex"),
                               mode: str = "default", count: int = DEFAULT_SAMPLE,
                               seed: int = 0, force: bool = False,
                               jobs: int = 1,
                               lattices: Iterable[Lattice] | None = None) -> SquarefreeScan:
    """Sweep every enumerated modular non-distributive lattice.

    Pure lattices form the conjecture's scope proper; non-pure modular
    lattices (none exist among finite lattices, but the branch is kept
    honest) would be swept with the plain families and reported separately.
    """
    if lattices is None:
        lattices = enumerate_lattices(max_elements)
    tasks = []
    for lat in lattices:
        if len(lat.elements) > max_elements:
            continue
        if is_distributive(lat) or not is_modular(lat):
            continue
        tasks.append((lat.elements, lat.covers, tuple(families), mode,
                      count, seed, force))
    results = _run_tasks(_squarefree_sweep_one, tasks, jobs)
    violations: list[tuple[str, str]] = []
    nonpure: list[tuple[str, str]] = []
    specs_checked = 0
    for pure, hits, n_specs in results:
        specs_checked += n_specs
        (violations if pure else nonpure).extend(hits)
    return SquarefreeScan(tuple(violations), tuple(nonpure),
                          len(tasks), specs_checked)


@dataclass(frozen=True)
class QuadraticVerdict:
    lattice_id: str
    elements: int
    trivial: bool
    generators_disjoint: bool
    all_quadratic: bool
    witness_order: str | None
    shape_match: bool
    candidate: bool

    def to_json_dict(self) -> dict:
        return {"lattice_id": self.lattice_id, "elements": self.elements,
                "trivial": self.trivial,
                "generators_disjoint": self.generators_disjoint,
                "all_quadratic": self.all_quadratic,
                "witness": self.witness_order, "shape_match": self.shape_match,
                "candidate": self.candidate}


def _grid2_ids(max_elements: int) -> set[str]:
    ids = set()
    k = 2
    while 2 * k <= max_elements:
        ids.add(lattice_id(catalog(f"grid:2x{k}")))
        k += 1
    return ids


def _quadratic_sweep_one(args) -> dict:
    elements, covers, families, mode, count, seed, force, grid_ids = args
    lattice = build_lattice(elements, covers)
    lid = lattice_id(lattice)
    gens = basic_binomials(lattice)
    trivial = not gens
    disjoint = all(g1.lhs.coprime(g2.lhs) and g1.lhs.coprime(g2.rhs)
                   and g1.rhs.coprime(g2.lhs) and g1.rhs.coprime(g2.rhs)
                   for i, g1 in enumerate(gens) for g2 in gens[i + 1:])
    all_quadratic = True
    witness = None
    if not trivial:
        for spec in _policy_specs(lattice.elements, families, mode, count, seed, force):
            rep = lattice_ideal_report(lattice, spec)
            if not rep.quadratic:
                all_quadratic = False
                witness = spec_to_string(spec)
                break
    shape_match = lid in grid_ids
    candidate = (not trivial and not disjoint and all_quadratic and not shape_match)
    return {"lattice_id": lid, "elements": len(elements), "trivial": trivial,
            "generators_disjoint": disjoint, "all_quadratic": all_quadratic,
            "witness_order": witness, "shape_match": shape_match,
            "candidate": candidate}


def quadratic_conjecture_scan(max_elements: int,
                              families: Sequence[str] = ("lex", "grevlex"),
                              mode: str = "default", count: int = DEFAULT_SAMPLE,
                              seed: int = 0, force: bool = False,
                              jobs: int = 1,
                              lattices: Iterable[Lattice] | None = None
                              ) -> tuple[QuadraticVerdict, ...]:
    """Verdict per enumerated lattice with no cut edges.

    A lattice whose sweep stays quadratic everywhere is matched against the
    2 x (r+1) grid shape (the divisor lattice of 2*3^r); a mismatch that is
    neither a zero ideal nor variable-disjoint generators is flagged as a
    counterexample candidate.
    """
    if lattices is None:
        lattices = enumerate_lattices(max_elements)
    grid_ids = frozenset(_grid2_ids(max_elements))
    tasks = []
    for lat in lattices:
        if len(lat.elements) > max_elements:
            continue
        if lat.is_pure and cut_edges(lat):
            continue
        tasks.append((lat.elements, lat.covers, tuple(families), mode,
                      count, seed, force, grid_ids))
    results = _run_tasks(_quadratic_sweep_one, tasks, jobs)
    return tuple(QuadraticVerdict(r["lattice_id"], r["elements"], r["trivial"],
                                  r["generators_disjoint"], r["all_quadratic"],
                                  r["witness_order"], r["shape_match"],
                                  r["candidate"]) for r in results)


def _run_tasks(fn, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


# ---------------------------------------------------------------------------
# Report rendering (JSON lines plus a totals footer)


def render_scan_report(records: Sequence[ScanRecord]) -> list[str]:
    lines = [json.dumps(r.to_json_dict(), sort_keys=True) for r in records]
    footer = {"records": len(records),
              "squarefree": sum(r.squarefree for r in records),
              "quadratic": sum(r.quadratic for r in records)}
    lines.append(json.dumps({"summary": footer}, sort_keys=True))
    return lines
