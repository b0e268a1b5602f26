import warnings
from itertools import combinations

import pytest

from latgb.lattice import (DuplicateName, NotALattice, NotAPoset,
                           NotDistributive, NotPure, RedundantCovers,
                           UnknownName, basic_binomials, build_lattice,
                           catalog, count_downsets, cut_edges,
                           find_sublattice, is_distributive, is_modular,
                           join_irreducibles, lattice_from_dict,
                           lattice_to_dict, longest_chain_ranks,
                           modular_rank_law, planar_embedding, product_lattice)
from latgb.monomials import Binomial, Monomial

CATALOG_SAMPLE = ["diamond", "pentagon", "b3", "c2", "chain:3", "boolean:2",
                  "boolean:3", "divisor:12", "divisor:18", "divisor:54",
                  "grid:2x2", "grid:2x3", "grid:3x3"]


def pairs_binomial(a, b, join, meet):
    return Binomial(Monomial.product([a, b]), Monomial.product([join, meet]))


class TestBuildLattice:
    def test_diamond_meet_join(self):
        lat = build_lattice("abcde", [("e", "b"), ("e", "c"), ("e", "d"),
                                      ("b", "a"), ("c", "a"), ("d", "a")])
        assert lat.meet("b", "c") == "e"
        assert lat.join("b", "c") == "a"
        assert lat.bottom == "e" and lat.top == "a"

    def test_chain_totally_ordered(self):
        lat = build_lattice(["x0", "x1", "x2"], [("x0", "x1"), ("x1", "x2")])
        for a in lat.elements:
            for b in lat.elements:
                assert lat.comparable(a, b)

    def test_two_maximal_elements_rejected(self):
        with pytest.raises(NotALattice):
            build_lattice(["o", "x", "y"], [("o", "x"), ("o", "y")])

    def test_duplicate_names(self):
        with pytest.raises(DuplicateName):
            build_lattice(["a", "a"], [])

    def test_cycle_rejected(self):
        with pytest.raises(NotAPoset):
            build_lattice(["a", "b"], [("a", "b"), ("b", "a")])

    def test_redundant_cover_rejected_then_normalized(self):
        covers = [("x0", "x1"), ("x1", "x2"), ("x0", "x2")]
        with pytest.raises(RedundantCovers):
            build_lattice(["x0", "x1", "x2"], covers)
        with pytest.warns(UserWarning):
            lat = build_lattice(["x0", "x1", "x2"], covers, normalize=True)
        assert lat.covers == (("x0", "x1"), ("x1", "x2"))

    def test_empty_rejected(self):
        with pytest.raises(NotALattice):
            build_lattice([], [])

    def test_single_element(self):
        lat = build_lattice(["e"], [])
        assert lat.bottom == lat.top == "e"
        assert lat.rank == {"e": 0}


class TestCatalog:
    def test_b3_covers(self):
        lat = catalog("b3")
        assert set(lat.elements) == set("abcdefgh")
        expected = {("b", "a"), ("c", "a"), ("d", "a"),
                    ("e", "b"), ("f", "b"), ("e", "c"), ("g", "c"),
                    ("f", "d"), ("g", "d"), ("h", "e"), ("h", "f"), ("h", "g")}
        assert set(lat.covers) == expected

    def test_divisor_18_is_2x3_grid(self):
        lat = catalog("divisor:18")
        assert set(lat.elements) == {"1", "2", "3", "6", "9", "18"}
        # independent oracle: map 2^i * 3^j to grid coordinates and compare covers
        coords = {"1": (0, 0), "2": (1, 0), "3": (0, 1),
                  "6": (1, 1), "9": (0, 2), "18": (1, 2)}
        expected_covers = set()
        for a, (i, j) in coords.items():
            for b, (k, l) in coords.items():
                if (k - i, l - j) in ((1, 0), (0, 1)):
                    expected_covers.add((a, b))
        assert set(lat.covers) == expected_covers

    def test_chain_1(self):
        lat = catalog("chain:1")
        assert len(lat.elements) == 2

    def test_unknown_names(self):
        for bad in ("octahedron", "divisor:0", "grid:0x2", "chain:-1", "grid:2"):
            with pytest.raises(UnknownName):
                catalog(bad)

    def test_boolean_sizes(self):
        assert len(catalog("boolean:3").elements) == 8
        assert len(catalog("boolean:1").elements) == 2


class TestPredicates:
    def test_modular(self):
        assert is_modular(catalog("diamond"))
        assert not is_modular(catalog("pentagon"))
        assert is_modular(catalog("grid:3x3"))

    def test_distributive(self):
        assert not is_distributive(catalog("diamond"))
        assert is_distributive(catalog("divisor:12"))
        assert is_distributive(catalog("chain:4"))

    def test_distributive_matches_forbidden_sublattice(self):
        for name in CATALOG_SAMPLE:
            lat = catalog(name)
            expected = is_modular(lat) and find_sublattice(lat, "diamond") is None
            assert is_distributive(lat) == expected

    def test_rank_law_diamond(self):
        assert modular_rank_law(catalog("diamond"))

    def test_rank_law_comparable_pairs_trivial(self):
        assert modular_rank_law(catalog("chain:4"))

    def test_rank_law_pentagon_longest_chain_ranks(self):
        pent = catalog("pentagon")
        ranks = longest_chain_ranks(pent)
        assert ranks == {"e": 0, "c": 1, "b": 2, "d": 1, "a": 3}
        # pair (c, d): 1 + 1 = 2 but meet e and join a give 0 + 3 = 3
        assert not modular_rank_law(pent, ranks)
        with pytest.raises(NotPure):
            modular_rank_law(pent)

    def test_purity(self):
        assert catalog("diamond").is_pure
        assert not catalog("pentagon").is_pure
        for name in CATALOG_SAMPLE:
            lat = catalog(name)
            if lat.rank is not None:
                assert lat.rank[lat.bottom] == 0
                for lo, hi in lat.covers:
                    assert lat.rank[hi] == lat.rank[lo] + 1


class TestLatticeAxioms:
    @pytest.mark.parametrize("name", CATALOG_SAMPLE)
    def test_axioms_exhaustive(self, name):
        lat = catalog(name)
        es = lat.elements
        for a in es:
            assert lat.meet(a, a) == a and lat.join(a, a) == a
            for b in es:
                assert lat.meet(a, b) == lat.meet(b, a)
                assert lat.join(a, b) == lat.join(b, a)
                assert lat.meet(a, lat.join(a, b)) == a
                assert lat.join(a, lat.meet(a, b)) == a
        if len(es) <= 9:
            for a in es:
                for b in es:
                    for c in es:
                        assert lat.meet(a, lat.meet(b, c)) == lat.meet(lat.meet(a, b), c)
                        assert lat.join(a, lat.join(b, c)) == lat.join(lat.join(a, b), c)

    def test_meet_join_are_bounds(self):
        lat = catalog("divisor:54")
        for a in lat.elements:
            for b in lat.elements:
                m, j = lat.meet(a, b), lat.join(a, b)
                assert lat.leq(m, a) and lat.leq(m, b)
                assert lat.leq(a, j) and lat.leq(b, j)


class TestCutEdges:
    def test_chain(self):
        assert cut_edges(catalog("chain:2")) == [("x0", "x1"), ("x1", "x2")]

    def test_divisor_18_level_sizes(self):
        # levels have sizes 1, 2, 2, 1: no two adjacent singleton levels
        assert cut_edges(catalog("divisor:18")) == []

    def test_pendant_top(self):
        lat = build_lattice(["bot", "x", "y", "one", "t"],
                            [("bot", "x"), ("bot", "y"),
                             ("x", "one"), ("y", "one"), ("one", "t")])
        assert cut_edges(lat) == [("one", "t")]

    def test_not_pure(self):
        with pytest.raises(NotPure):
            cut_edges(catalog("pentagon"))


class TestFindSublattice:
    def test_b3_has_no_diamond(self):
        assert find_sublattice(catalog("b3"), "diamond") is None

    def test_diamond_in_itself(self):
        image = find_sublattice(catalog("diamond"), "diamond")
        assert image is not None and sorted(image.values()) == list("abcde")

    def test_boolean3_contains_b3(self):
        image = find_sublattice(catalog("boolean:3"), "b3")
        assert image is not None
        lat = catalog("boolean:3")
        pat = catalog("b3")
        for x in pat.elements:
            for y in pat.elements:
                assert image[pat.meet(x, y)] == lat.meet(image[x], image[y])
                assert image[pat.join(x, y)] == lat.join(image[x], image[y])

    def test_pentagon_found_in_nonmodular(self):
        assert find_sublattice(catalog("pentagon"), "pentagon") is not None
        assert find_sublattice(catalog("grid:3x3"), "pentagon") is None


class TestBasicBinomials:
    def test_diamond(self):
        got = basic_binomials(catalog("diamond"))
        expected = [pairs_binomial("b", "c", "a", "e"),
                    pairs_binomial("b", "d", "a", "e"),
                    pairs_binomial("c", "d", "a", "e")]
        assert got == expected

    def test_chain_empty(self):
        assert basic_binomials(catalog("chain:5")) == []

    def test_c2(self):
        got = basic_binomials(catalog("c2"))
        expected = [pairs_binomial("b", "c", "a", "d"),
                    pairs_binomial("e", "f", "d", "g")]
        assert got == expected

    @pytest.mark.parametrize("name", CATALOG_SAMPLE)
    def test_homogeneous_degree_two(self, name):
        for b in basic_binomials(catalog(name)):
            assert b.lhs.degree == 2 and b.rhs.degree == 2

    @pytest.mark.parametrize("name", ["diamond", "grid:3x3", "divisor:54", "boolean:3"])
    def test_rank_sums_on_pure_modular(self, name):
        lat = catalog(name)
        assert is_modular(lat) and lat.rank is not None
        for b in basic_binomials(lat):
            for side in (b.lhs, b.rhs):
                assert sum(lat.rank[v] * e for v, e in side.exps) == \
                       sum(lat.rank[v] * e for v, e in b.lhs.exps)

    @pytest.mark.parametrize("name", CATALOG_SAMPLE)
    def test_interval_closure(self, name):
        lat = catalog(name)
        gens = basic_binomials(lat)
        for x in lat.elements:
            for y in lat.elements:
                if not lat.leq(x, y):
                    continue
                box = set(lat.interval(x, y))
                for b in gens:
                    if set(b.lhs.variables()) <= box:
                        assert set(b.rhs.variables()) <= box


class TestBirkhoff:
    def test_boolean3_antichain(self):
        poset = join_irreducibles(catalog("boolean:3"))
        assert len(poset) == 3
        assert not poset.less

    def test_chain(self):
        poset = join_irreducibles(catalog("chain:4"))
        assert len(poset) == 4
        assert len(poset.less) == 6  # all pairs comparable

    def test_divisor_18_two_chains(self):
        poset = join_irreducibles(catalog("divisor:18"))
        assert set(poset.elements) == {"2", "3", "9"}
        assert poset.less == frozenset({("3", "9")})

    def test_not_distributive(self):
        with pytest.raises(NotDistributive):
            join_irreducibles(catalog("diamond"))

    @pytest.mark.parametrize("name", ["chain:3", "boolean:2", "boolean:3",
                                      "divisor:12", "divisor:54", "grid:3x3", "c2"])
    def test_downset_count_equals_size(self, name):
        lat = catalog(name)
        assert count_downsets(join_irreducibles(lat)) == len(lat.elements)


def brute_force_width(lat, elems):
    best = 0
    for r in range(1, len(elems) + 1):
        for combo in combinations(elems, r):
            if all(not lat.comparable(x, y) for x, y in combinations(combo, 2)):
                best = max(best, r)
    return best


class TestPlanarEmbedding:
    def test_divisor_18_exponent_coords(self):
        emb = planar_embedding(catalog("divisor:18"))
        assert emb is not None and (emb.m, emb.n) == (1, 2)
        assert emb.coords == {"1": (0, 0), "2": (1, 0), "3": (0, 1),
                              "6": (1, 1), "9": (0, 2), "18": (1, 2)}

    def test_boolean3_none(self):
        assert planar_embedding(catalog("boolean:3")) is None

    def test_chain(self):
        emb = planar_embedding(catalog("chain:3"))
        assert emb.coords == {f"x{i}": (i, 0) for i in range(4)}

    def test_diamond_none(self):
        assert planar_embedding(catalog("diamond")) is None

    @pytest.mark.parametrize("name", CATALOG_SAMPLE)
    def test_presence_iff_narrow_distributive(self, name):
        lat = catalog(name)
        emb = planar_embedding(lat)
        if not is_distributive(lat):
            assert emb is None
            return
        poset = join_irreducibles(lat)
        width = brute_force_width(lat, poset.elements)
        assert (emb is not None) == (width <= 2)
        if emb is not None:
            for a in lat.elements:
                for b in lat.elements:
                    ca, cb = emb.coords[a], emb.coords[b]
                    assert emb.coords[lat.meet(a, b)] == (min(ca[0], cb[0]), min(ca[1], cb[1]))
                    assert emb.coords[lat.join(a, b)] == (max(ca[0], cb[0]), max(ca[1], cb[1]))


class TestFileFormat:
    def test_round_trip(self):
        lat = catalog("c2")
        again = lattice_from_dict(lattice_to_dict(lat))
        assert again.elements == lat.elements
        assert again.covers == lat.covers

    def test_bad_name_rejected(self):
        with pytest.raises(Exception):
            lattice_from_dict({"elements": ["a", "b c"], "covers": [["a", "b c"]]})

    def test_schema_errors(self):
        with pytest.raises(Exception):
            lattice_from_dict({"elements": "abc", "covers": []})
        with pytest.raises(Exception):
            lattice_from_dict({"elements": ["a"], "covers": [["a"]]})

    def test_normalization_option(self):
        data = {"elements": ["x0", "x1", "x2"],
                "covers": [["x0", "x1"], ["x1", "x2"], ["x0", "x2"]]}
        with pytest.raises(RedundantCovers):
            lattice_from_dict(data)
        with pytest.warns(UserWarning):
            lat = lattice_from_dict(data, normalize=True)
        assert len(lat.covers) == 2


class TestProduct:
    def test_product_of_chains_is_grid(self):
        prod = product_lattice(catalog("chain:1"), catalog("chain:2"))
        assert len(prod.elements) == 6
        assert is_distributive(prod)
        assert prod.is_pure

    def test_product_preserves_distributivity(self):
        prod = product_lattice(catalog("b3"), catalog("chain:1"))
        assert len(prod.elements) == 16
        assert is_distributive(prod)
