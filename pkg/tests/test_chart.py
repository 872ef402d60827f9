"""Charts, sections, endomorphisms, adjoints, and family validation."""

from fractions import Fraction

import pytest

from conftest import seeded
from tensorcert.chart import (
    Chart,
    ChartMismatchError,
    Endomorphism,
    FamilyValidationError,
    GeneralizedSection,
    validate_family,
)
from tensorcert.courant import inner_product
from tensorcert.fleet import build_fleet
from tensorcert.xyz import Signature


def random_section(rng, chart):
    ring = chart.ring

    def scalar():
        terms = {}
        for _ in range(rng.randint(1, 2)):
            key = tuple(rng.randint(0, 1) for _ in range(ring.nvars))
            c = Fraction(rng.randint(-2, 2))
            if c:
                terms[key] = terms.get(key, Fraction(0)) + c
        return ring.from_terms({m: c for m, c in terms.items() if c})

    n = chart.dim
    return GeneralizedSection(chart, tuple(scalar() for _ in range(n)), tuple(scalar() for _ in range(n)))


def random_endo(rng, chart):
    size = 2 * chart.dim
    return Endomorphism(
        chart,
        [[chart.ring.const(rng.randint(-2, 2)) for _ in range(size)] for _ in range(size)],
    )


class TestSections:
    def test_module_structure(self):
        chart = Chart(2)
        a = chart.basis_vector(1)
        u1 = chart.coordinate(1)
        scaled = a.scale(u1)
        assert scaled.vector[0] == u1
        assert (scaled - scaled).is_zero()

    def test_chart_mismatch(self):
        with pytest.raises(ChartMismatchError):
            Chart(1).basis_vector(1) + Chart(2).basis_vector(1)


class TestEndomorphisms:
    def test_identity_acts_trivially(self):
        chart = Chart(2)
        rng = seeded("endo-identity")
        s = random_section(rng, chart)
        assert Endomorphism.identity(chart).apply(s) == s

    def test_compose_matches_application(self):
        rng = seeded("endo-compose")
        chart = Chart(2)
        for _ in range(10):
            phi, psi = random_endo(rng, chart), random_endo(rng, chart)
            s = random_section(rng, chart)
            assert phi.compose(psi).apply(s) == phi.apply(psi.apply(s))

    def test_adjoint_identity(self):
        chart = Chart(1)
        assert Endomorphism.identity(chart).adjoint() == Endomorphism.identity(chart)

    def test_adjoint_defining_identity_on_bases(self):
        rng = seeded("adjoint-pairs")
        for dim in (1, 2):
            chart = Chart(dim)
            basis = chart.basis_sections()
            for _ in range(6):
                phi = random_endo(rng, chart)
                adj = phi.adjoint()
                for a in basis:
                    for b in basis:
                        assert inner_product(phi.apply(a), b) == inner_product(a, adj.apply(b))

    def test_adjoint_contravariance(self):
        rng = seeded("adjoint-contravariant")
        chart = Chart(2)
        for _ in range(8):
            phi, psi = random_endo(rng, chart), random_endo(rng, chart)
            assert phi.compose(psi).adjoint() == psi.adjoint().compose(phi.adjoint())


class TestFamilies:
    def test_skew_single(self):
        chart = Chart(1)
        o, z = chart.ring.one, chart.ring.zero
        phi = Endomorphism(chart, [[o, z], [z, -o]])
        family = validate_family([phi], Signature((-1,)))
        assert family.n == 1

    def test_repeated_skew_member_commutes(self):
        chart = Chart(1)
        o, z = chart.ring.one, chart.ring.zero
        phi = Endomorphism(chart, [[o, z], [z, -o]])
        family = validate_family([phi, phi], Signature((-1, -1)))
        assert family.member(1) == family.member(2)

    def test_wrong_symmetry_type_rejected(self):
        chart = Chart(1)
        o, z = chart.ring.one, chart.ring.zero
        skew = Endomorphism(chart, [[o, z], [z, -o]])
        with pytest.raises(FamilyValidationError, match="member 1 is not symmetric"):
            validate_family([skew], Signature((1,)))

    def test_noncommuting_pair_rejected(self):
        chart = Chart(1)
        ring = chart.ring
        z = ring.zero
        sym_b = Endomorphism(chart, [[z, ring.one], [z, z]])
        sym_c = Endomorphism(chart, [[z, z], [ring.one, z]])
        with pytest.raises(FamilyValidationError, match="do not commute"):
            validate_family([sym_b, sym_c], Signature((1, 1)))

    def test_power_endo_caches_consistently(self):
        fleet = {e.name: e for e in build_fleet()}
        family = fleet["kahler-pair-n2"].family
        phi1, phi2 = family.members
        assert family.power_endo((2, 1)) == phi1.compose(phi1).compose(phi2)
        assert family.power_endo((0, 0)) == Endomorphism.identity(family.chart)

    def test_fleet_members_all_validate(self):
        # construction re-checks symmetry and commutation for every fixture
        assert len(build_fleet()) >= 20
