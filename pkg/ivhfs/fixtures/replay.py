"""Claims each bundled fixture is expected to reproduce."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Tuple

from ivhfs.fixtures import load_fixture
from ivhfs.models.interval import OrderProfile, UnitInterval
from ivhfs.models.topology import Axiom, TopologyComparison
from ivhfs.services.hfe_ops import score
from ivhfs.services.softset_ops import (
    CellWitness,
    normalize,
    ss_complement,
    ss_equal,
    ss_intersection,
    ss_union,
    subset_witness,
)
from ivhfs.services.topology_service import TopologyService, as_point
from ivhfs.services.workspace_service import Workspace

COMPONENTWISE = OrderProfile.COMPONENTWISE
RANK = OrderProfile.RANK_SELECT
BOTH = (COMPONENTWISE, RANK)


@dataclass(frozen=True)
class Claim:
    fixture: str
    description: str
    profile: OrderProfile
    check: Callable[[Workspace, OrderProfile], bool]


def _interval(lower: str, upper: str) -> UnitInterval:
    return UnitInterval(Fraction(lower), Fraction(upper))


def _canonical_h1(ws, profile):
    cell = ws.resolve_set("F").cell("e", "h1")
    return cell.elements == (_interval("0.2", "0.7"), _interval("0.6", "0.8"))


def _score_h1(ws, profile):
    return score(ws.resolve_set("F").cell("e", "h1")) == _interval("0.4", "0.75")


def _sets_equal(left: str, right: str):
    def check(ws, profile):
        return ss_equal(ws.resolve_set(left), ws.resolve_set(right), profile)
    return check


DISTRIBUTIVE_TERMS: Tuple[Tuple[str, Callable], ...] = (
    ("F_A_cup_G_B", lambda f, g, h, p: ss_union(f, g, p)),
    ("F_A_cup_H_C", lambda f, g, h, p: ss_union(f, h, p)),
    ("F_A_cup_G_B_cap_F_A_cup_H_C", lambda f, g, h, p: ss_intersection(ss_union(f, g, p), ss_union(f, h, p), p)),
    ("G_B_cap_H_C", lambda f, g, h, p: ss_intersection(g, h, p)),
    ("F_A_cup_G_B_cap_H_C", lambda f, g, h, p: ss_union(f, ss_intersection(g, h, p), p)),
    ("F_A_cap_G_B", lambda f, g, h, p: ss_intersection(f, g, p)),
    ("G_B_cup_H_C", lambda f, g, h, p: ss_union(g, h, p)),
    ("F_A_cap_G_B_cup_H_C", lambda f, g, h, p: ss_intersection(f, ss_union(g, h, p), p)),
    ("F_A_cap_H_C", lambda f, g, h, p: ss_intersection(f, h, p)),
    ("F_A_cap_G_B_cup_F_A_cap_H_C", lambda f, g, h, p: ss_union(ss_intersection(f, g, p), ss_intersection(f, h, p), p)),
)


def _stored_term(name: str, compute: Callable):
    def check(ws, profile):
        f, g, h = (ws.resolve_set(n) for n in ("F_A", "G_B", "H_C"))
        return ss_equal(compute(f, g, h, profile), ws.resolve_set(name), profile)
    return check


def _distributive(first: str, second: str):
    terms = dict(DISTRIBUTIVE_TERMS)

    def check(ws, profile):
        f, g, h = (ws.resolve_set(n) for n in ("F_A", "G_B", "H_C"))
        return ss_equal(terms[first](f, g, h, profile), terms[second](f, g, h, profile), profile)
    return check


def _tau_valid(ws, profile):
    return TopologyService(profile).validate_topology(ws.family("tau")).valid


def _tau_join_witness(ws, profile):
    report = TopologyService(profile).validate_topology(ws.family("tau"))
    joins = [v for v in report.violations if v.axiom is Axiom.JOIN_CLOSED]
    return (
        not report.valid
        and [v.operands for v in joins] == [("F_A", "G_B")]
        and joins[0].cell == CellWitness("e1", "h2", 2)
    )


def _combined_is(operation: Callable, expected: str):
    def check(ws, profile):
        combined = operation(ws.resolve_set("F_A"), ws.resolve_set("G_B"), profile)
        return ss_equal(combined, ws.resolve_set(expected), profile)
    return check


def _complement_is(name: str, expected: str):
    def check(ws, profile):
        return ss_equal(ss_complement(ws.resolve_set(name)), ws.resolve_set(expected), profile)
    return check


def _closure_of_i_c(ws, profile):
    service = TopologyService(profile)
    return ss_equal(service.closure(ws.family("tau"), ws.resolve_set("I_C")), ws.resolve_set("G_B_C"), profile)


def _i_c_outside_f_a_c(ws, profile):
    witness = subset_witness(ws.resolve_set("I_C"), ss_complement(ws.resolve_set("F_A")), profile)
    return witness == CellWitness("e2", "h1", 1)


def _g_b_c_closed(ws, profile):
    return TopologyService(profile).is_closed(ws.family("tau"), ws.resolve_set("G_B_C"))


def _interior_of_i_c(ws, profile):
    service = TopologyService(profile)
    interior = service.interior(ws.family("tau"), ws.resolve_set("I_C_int"))
    return ss_equal(interior, normalize(ws.resolve_set("G_B")), profile)


def _tau1_coarser(ws, profile):
    service = TopologyService(profile)
    return service.compare_topologies(ws.family("tau1"), ws.family("tau2")) is TopologyComparison.COARSER


def _point_at_e2(ws, profile):
    point = as_point(ws.resolve_set("F_A"))
    return point is not None and point.at == "e2"


def _point_in_g_b(ws, profile):
    return TopologyService(profile).point_in(as_point(ws.resolve_set("F_A")), ws.resolve_set("G_B"))


def _nbd_of_point(ws, profile):
    service = TopologyService(profile)
    point = as_point(ws.resolve_set("F_A"))
    return service.nbd_witness_of_point(ws.family("tau"), ws.resolve_set("I_C"), point) == "G_B"


def _h_a_outside_g_b(ws, profile):
    service = TopologyService(profile)
    h_a, g_b = ws.resolve_set("H_A"), ws.resolve_set("G_B")
    return (
        service.nbd_witness_of_set(ws.family("tau"), ws.resolve_set("I_C"), h_a) is None
        and subset_witness(h_a, g_b, profile) == CellWitness("e1", "h1", 0)
    )


def _claims() -> Iterator[Claim]:
    yield Claim("example_2_7", "h1 loads in ascending order", COMPONENTWISE, _canonical_h1)
    yield Claim("example_2_7", "score of h1 is [0.4, 0.75]", COMPONENTWISE, _score_h1)
    for profile in BOTH:
        yield Claim("example_3_2", "F_A equals G_A", profile, _sets_equal("F_A", "G_A"))
    for name, compute in DISTRIBUTIVE_TERMS:
        yield Claim("prop_3_3", f"{name} matches the stored set", COMPONENTWISE, _stored_term(name, compute))
    yield Claim(
        "prop_3_3", "union distributes over intersection", COMPONENTWISE,
        _distributive("F_A_cup_G_B_cap_H_C", "F_A_cup_G_B_cap_F_A_cup_H_C"),
    )
    yield Claim(
        "prop_3_3", "intersection distributes over union", COMPONENTWISE,
        _distributive("F_A_cap_G_B_cup_H_C", "F_A_cap_G_B_cup_F_A_cap_H_C"),
    )
    yield Claim("example_3_5", "tau is a topology", RANK, _tau_valid)
    yield Claim("example_3_5", "F_A meet G_B equals G_B", RANK, _combined_is(ss_intersection, "G_B"))
    yield Claim("example_3_5", "F_A join G_B equals F_A", RANK, _combined_is(ss_union, "F_A"))
    yield Claim(
        "example_3_5", "tau fails join-closed for (F_A, G_B) at (e1, h2), element 3",
        COMPONENTWISE, _tau_join_witness,
    )
    yield Claim("example_3_5", "complement of F_A matches the stored set", COMPONENTWISE, _complement_is("F_A", "F_A_C"))
    yield Claim("example_3_5", "complement of G_B matches the stored set", COMPONENTWISE, _complement_is("G_B", "G_B_C"))
    yield Claim("example_3_5", "G_B^C is closed in tau", COMPONENTWISE, _g_b_c_closed)
    yield Claim("example_3_5", "I_C is not inside F_A^C at (e2, h1)", COMPONENTWISE, _i_c_outside_f_a_c)
    yield Claim("example_3_5", "closure of I_C is G_B^C", COMPONENTWISE, _closure_of_i_c)
    for profile in BOTH:
        yield Claim("example_3_5", "interior of I_C_int is G_B", profile, _interior_of_i_c)
        yield Claim("example_3_5", "tau1 is coarser than tau2", profile, _tau1_coarser)
    yield Claim("example_3_19_to_3_26", "F_A is a soft point at e2", COMPONENTWISE, _point_at_e2)
    for profile in BOTH:
        yield Claim("example_3_19_to_3_26", "e2(F_A) lies in G_B", profile, _point_in_g_b)
        yield Claim("example_3_19_to_3_26", "I_C is a neighborhood of e2(F_A) via G_B", profile, _nbd_of_point)
        yield Claim(
            "example_3_19_to_3_26",
            "I_C is not a neighborhood of H_A: H_A leaves G_B at (e1, h1)",
            profile,
            _h_a_outside_g_b,
        )


CLAIMS: List[Claim] = list(_claims())


def replay(claim: Claim) -> bool:
    return claim.check(load_fixture(claim.fixture), claim.profile)
