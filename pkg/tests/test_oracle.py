import pytest

from heightzeta.algebra import DiscSeries, L, LatticePoly
from heightzeta.kodaira import CATALOG_NAMES, I_CUSP, catalog
from heightzeta.oracle import (
    configuration_census,
    oracle_factor_expansion,
    oracle_z_triv,
)
from heightzeta.zeta import build_factor, euler_factor, z_triv


class TestFactorExpansion:
    def test_type_II_by_hand(self):
        # N = 0, 1, 2 terms of sum Sym^N(P^1) (L^15 s^2)^N
        out = oracle_factor_expansion(catalog("full").by_label("II"), 4)
        expected = (
            DiscSeries.one(4)
            + DiscSeries.monomial(4, 2, (1 + L) * L ** 15)
            + DiscSeries.monomial(4, 4, (1 + L + L ** 2) * L ** 30)
        )
        assert out == expected

    def test_order_zero(self):
        for ft in catalog("full").types:
            assert oracle_factor_expansion(ft, 0) == DiscSeries.one(0)

    def test_cusp_matches_euler_factor(self):
        ft = catalog("full").by_label(I_CUSP)
        for order in (6, 12, 24):
            assert oracle_factor_expansion(ft, order) == \
                euler_factor(build_factor(ft, order))


class TestOracleZTriv:
    def test_constant_term(self):
        out = oracle_z_triv(catalog("full"), 0)
        assert out.coeffs[0] == LatticePoly.monomial(2, L)

    def test_s1_coefficient(self):
        out = oracle_z_triv(catalog("full"), 1)
        assert out.coeffs[1] == LatticePoly.monomial(2, L ** 17 + L ** 18)

    @pytest.mark.parametrize("name", CATALOG_NAMES)
    def test_matches_euler_product(self, name):
        cat = catalog(name)
        assert oracle_z_triv(cat, 14) == z_triv(cat, 14).series

    def test_respects_prefactor(self):
        pre = LatticePoly.monomial(3, L ** 2)
        cat = catalog("gamma1_4")
        assert oracle_z_triv(cat, 8, pre) == z_triv(cat, 8, pre).series


class TestCensus:
    def test_degree_zero(self):
        report = configuration_census(catalog("full"), 0)
        assert report["degrees"][0] == {
            "degree": 0,
            "count": 1,
            "t_distribution": {"2": 1},
            "max_contact_order": 0,
            "flagged": [],
        }

    def test_degree_two(self):
        row = configuration_census(catalog("full"), 2)["degrees"][2]
        assert row["count"] == 3
        assert row["t_distribution"] == {"2": 2, "3": 1}

    def test_max_contact_order_at_twelve(self):
        report = configuration_census(catalog("full"), 12)
        assert report["degrees"][12]["max_contact_order"] == 12

    def test_flags_I12(self):
        row = configuration_census(catalog("full"), 12)["degrees"][12]
        flagged = {f["configuration"]: f for f in row["flagged"]}
        assert "I_12" in flagged
        assert flagged["I_12"]["trivial_lattice_rank"] == 13
        assert flagged["I_12"]["bound"] == 10

    def test_counts_monotone_under_type_restriction(self):
        # every gamma1_2 configuration is also a full-catalog configuration
        full = configuration_census(catalog("full"), 10)
        sub = configuration_census(catalog("gamma1_2"), 10)
        for d in range(11):
            assert sub["degrees"][d]["count"] <= full["degrees"][d]["count"]

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            configuration_census(catalog("full"), -1)
