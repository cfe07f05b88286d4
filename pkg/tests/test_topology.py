import pytest

from ivhfs.core.exceptions import ContextMismatch, DuplicateMember, NotAPoint, TopologyError
from ivhfs.models.interval import NULL_INTERVAL, OrderProfile
from ivhfs.models.softset import Context, SoftSet
from ivhfs.models.topology import Axiom, Family, SoftPoint, TopologyComparison
from ivhfs.services.hfe_ops import canonicalize
from ivhfs.services.softset_ops import CellWitness, absolute_set, normalize, null_set, ss_equal
from ivhfs.services.topology_service import TopologyService, as_point, complement_name

CW = OrderProfile.COMPONENTWISE
RANK = OrderProfile.RANK_SELECT


def family_of(workspace, *names):
    return Family(workspace.context, tuple((name, workspace.resolve_set(name)) for name in names))


class TestFamily:
    def test_members_are_normalized(self, example_3_5):
        tau = example_3_5.family("tau")
        assert tau.names == ("phi", "E", "F_A", "G_B")
        assert tau.get("G_B").support == ("e1", "e2", "e3")
        assert tau.get("G_B").cell("e3", "h1").is_null

    def test_duplicate_member(self, example_3_5):
        with pytest.raises(DuplicateMember):
            family_of(example_3_5, "F_A", "F_A")

    def test_foreign_context(self, example_3_5):
        other = Context(("h1",), ("e1",))
        with pytest.raises(ContextMismatch):
            Family(example_3_5.context, (("phi", null_set(other)),))

    def test_complement_names(self):
        assert complement_name("phi") == "E"
        assert complement_name("E") == "phi"
        assert complement_name("G_B") == "G_B^C"


class TestValidation:
    def test_valid_under_rank(self, example_3_5):
        assert TopologyService(RANK).validate_topology(example_3_5.family("tau")).valid

    def test_componentwise_violations(self, example_3_5):
        report = TopologyService(CW).validate_topology(example_3_5.family("tau"))
        assert not report.valid
        assert [v.axiom for v in report.violations] == [Axiom.MEET_CLOSED, Axiom.JOIN_CLOSED]
        assert all(v.operands == ("F_A", "G_B") for v in report.violations)

    def test_join_witness_cell(self, example_3_5):
        report = TopologyService(CW).validate_topology(example_3_5.family("tau"))
        join = report.violations[1]
        assert join.cell == CellWitness("e1", "h2", 2)
        assert join.witness.support == ("e1", "e2", "e3")

    def test_missing_phi_and_e(self, example_3_5):
        report = TopologyService(RANK).validate_topology(family_of(example_3_5, "F_A"))
        assert [v.axiom for v in report.violations] == [Axiom.CONTAINS_PHI, Axiom.CONTAINS_E]
        assert report.violations[0].operands == ()

    def test_padded_member_counts(self, example_3_5):
        context = example_3_5.context
        zeros = canonicalize([NULL_INTERVAL, NULL_INTERVAL])
        padded = SoftSet(context, context.parameters, {(p, o): zeros for p in context.parameters for o in context.universe})
        assert TopologyService(CW).find_member(example_3_5.family("tau1"), padded) == "phi"

    @pytest.mark.parametrize("profile", list(OrderProfile))
    def test_workers_do_not_change_the_report(self, example_3_5, profile):
        tau = example_3_5.family("tau")
        serial = TopologyService(profile, workers=1).validate_topology(tau)
        threaded = TopologyService(profile, workers=4).validate_topology(tau)
        assert threaded == serial


class TestOpenAndClosed:
    def test_closed_members(self, example_3_5):
        closed = TopologyService(CW).closed_members(example_3_5.family("tau"))
        assert [name for name, _ in closed] == ["E", "phi", "F_A^C", "G_B^C"]
        assert ss_equal(closed[3][1], example_3_5.resolve_set("G_B_C"), CW)

    def test_is_open_and_closed(self, example_3_5):
        service, tau = TopologyService(CW), example_3_5.family("tau")
        assert service.is_open(tau, example_3_5.resolve_set("G_B"))
        assert service.is_closed(tau, example_3_5.resolve_set("G_B_C"))
        assert not service.is_closed(tau, example_3_5.resolve_set("I_C"))

    def test_closure_of_i_c(self, example_3_5):
        hull = TopologyService(CW).closure_with_terms(example_3_5.family("tau"), example_3_5.resolve_set("I_C"))
        assert ss_equal(hull.value, example_3_5.resolve_set("G_B_C"), CW)
        assert hull.contributors == ("E", "G_B^C")

    @pytest.mark.parametrize("profile", list(OrderProfile))
    def test_interior_of_i_c_int(self, example_3_5, profile):
        hull = TopologyService(profile).interior_with_terms(
            example_3_5.family("tau"), example_3_5.resolve_set("I_C_int")
        )
        g_b = example_3_5.resolve_set("G_B")
        assert hull.value.support == example_3_5.context.parameters
        assert not ss_equal(hull.value, g_b, profile)
        assert ss_equal(hull.value, normalize(g_b), profile)
        assert hull.contributors == ("phi", "G_B")

    @pytest.mark.parametrize("profile", list(OrderProfile))
    def test_trivial_hulls(self, example_3_5, profile):
        service, tau, context = TopologyService(profile), example_3_5.family("tau"), example_3_5.context
        phi, e = null_set(context), absolute_set(context)
        assert ss_equal(service.closure(tau, phi), phi, profile)
        assert ss_equal(service.closure(tau, e), e, profile)
        assert ss_equal(service.interior(tau, phi), phi, profile)
        assert ss_equal(service.interior(tau, e), e, profile)

    def test_closure_rejects_foreign_sets(self, example_3_5):
        other = Context(("h1",), ("e1",))
        with pytest.raises(ContextMismatch):
            TopologyService(CW).closure(example_3_5.family("tau"), absolute_set(other))


class TestComparison:
    @pytest.mark.parametrize("profile", list(OrderProfile))
    def test_coarser_and_finer(self, example_3_5, profile):
        service = TopologyService(profile)
        tau1, tau2 = example_3_5.family("tau1"), example_3_5.family("tau2")
        assert service.compare_topologies(tau1, tau2) is TopologyComparison.COARSER
        assert service.compare_topologies(tau2, tau1) is TopologyComparison.FINER
        assert service.is_comparable(tau1, tau2)

    def test_equal(self, example_3_5):
        service = TopologyService(RANK)
        assert service.compare_topologies(example_3_5.family("tau"), example_3_5.family("tau2")) is (
            TopologyComparison.EQUAL
        )

    def test_incomparable(self, example_3_5):
        service = TopologyService(RANK)
        first = family_of(example_3_5, "phi", "E", "F_A")
        second = family_of(example_3_5, "phi", "E", "G_B")
        assert service.compare_topologies(first, second) is TopologyComparison.INCOMPARABLE
        assert not service.is_comparable(first, second)

    def test_intersection_of_families(self, example_3_5):
        service = TopologyService(RANK)
        common = service.intersect_topologies([example_3_5.family("tau1"), example_3_5.family("tau2")])
        assert common.names == ("phi", "E", "F_A")
        assert service.validate_topology(common).valid

    def test_intersection_needs_a_family(self):
        with pytest.raises(TopologyError):
            TopologyService(RANK).intersect_topologies([])


class TestPoints:
    def test_as_point(self, example_3_19):
        assert as_point(example_3_19.resolve_set("F_A")).at == "e2"
        assert as_point(example_3_19.resolve_set("G_B")) is None
        assert as_point(null_set(example_3_19.context)) is None

    def test_soft_point_checks(self, example_3_19):
        context = example_3_19.context
        with pytest.raises(NotAPoint):
            SoftPoint(absolute_set(context), "e1")
        with pytest.raises(NotAPoint):
            SoftPoint(null_set(context), "e1")
        with pytest.raises(NotAPoint):
            SoftPoint(example_3_19.resolve_set("F_A"), "e9")

    @pytest.mark.parametrize("profile", list(OrderProfile))
    def test_point_in(self, example_3_19, profile):
        service = TopologyService(profile)
        point = as_point(example_3_19.resolve_set("F_A"))
        assert service.point_in(point, example_3_19.resolve_set("G_B"))
        assert not service.point_in(point, example_3_19.resolve_set("H_A"))

    @pytest.mark.parametrize("profile", list(OrderProfile))
    def test_neighborhood_of_a_point(self, example_3_19, profile):
        service = TopologyService(profile)
        point = as_point(example_3_19.resolve_set("F_A"))
        tau = example_3_19.family("tau")
        assert service.nbd_witness_of_point(tau, example_3_19.resolve_set("I_C"), point) == "G_B"
        assert not service.is_nbd_of_point(tau, example_3_19.resolve_set("H_A"), point)

    def test_neighborhood_system(self, example_3_19):
        service = TopologyService(CW)
        tau = example_3_19.family("tau")
        pool = service.neighborhood_pool(tau)
        assert [name for name, _ in pool] == ["phi", "E", "G_B", "G_B^C"]
        point = as_point(example_3_19.resolve_set("F_A"))
        assert service.nbd_system(tau, point, [soft_set for _, soft_set in pool]) == [False, True, True, False]

    @pytest.mark.parametrize("profile", list(OrderProfile))
    def test_neighborhood_of_a_set(self, example_3_19, profile):
        service = TopologyService(profile)
        tau, i_c = example_3_19.family("tau"), example_3_19.resolve_set("I_C")
        assert service.nbd_witness_of_set(tau, i_c, example_3_19.resolve_set("F_A")) == "G_B"
        assert not service.is_nbd_of_set(tau, i_c, example_3_19.resolve_set("H_A"))

    def test_point_pool(self, example_3_19):
        points = TopologyService(CW).point_pool(example_3_19.family("tau"))
        names = [name for name, _ in points]
        assert names[:4] == ["e1(E)", "e2(E)", "e3(E)", "e4(E)"]
        assert "e4(G_B^C)" not in names
        assert len(points) == 10
        assert all(isinstance(found, SoftPoint) for _, found in points)
