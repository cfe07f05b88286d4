"""Command handlers: resolve names in the workspace and call the services."""
from argparse import Namespace

import structlog

from ivhfs.core.exceptions import NotAPoint
from ivhfs.fixtures import FIXTURE_NAMES
from ivhfs.models.interval import OrderProfile
from ivhfs.models.softset import SoftSet
from ivhfs.models.topology import SoftPoint, TopologyComparison
from ivhfs.services.hfe_ops import score
from ivhfs.services.softset_ops import (
    equality_witness,
    ss_complement,
    ss_intersection,
    ss_ring_product,
    ss_ring_sum,
    ss_union,
    subset_witness,
)
from ivhfs.services.topology_service import TopologyService, as_point
from ivhfs.services.workspace_service import Workspace
from ivhfs.cli.render import Outcome

logger = structlog.get_logger(__name__)


def _point(workspace: Workspace, name: str) -> SoftPoint:
    point = as_point(workspace.resolve_set(name))
    if point is None:
        raise NotAPoint(f"{name} is not a soft point", {"set": name})
    return point


def _warn_if_invalid(service: TopologyService, workspace: Workspace, name: str, outcome: Outcome) -> None:
    report = service.validate_topology(workspace.family(name))
    if not report.valid:
        logger.warning(
            "Family is not a topology; result computed anyway",
            topology=name,
            violations=len(report.violations),
        )
        outcome.notes.append(f"warning: {name} is not a topology under this profile")


def canon(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    return Outcome("canon", workspace.resolve_set(args.set))


def complement(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    return Outcome("complement", ss_complement(workspace.resolve_set(args.set)))


def union(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    return Outcome("union", ss_union(workspace.resolve_set(args.left), workspace.resolve_set(args.right), profile))


def intersect(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    result = ss_intersection(workspace.resolve_set(args.left), workspace.resolve_set(args.right), profile)
    return Outcome("intersect", result)


def ring_sum(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    return Outcome("ring-sum", ss_ring_sum(workspace.resolve_set(args.left), workspace.resolve_set(args.right)))


def ring_product(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    result = ss_ring_product(workspace.resolve_set(args.left), workspace.resolve_set(args.right))
    return Outcome("ring-product", result)


def subset(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    witness = subset_witness(workspace.resolve_set(args.left), workspace.resolve_set(args.right), profile)
    return Outcome("subset", witness is None, ok=witness is None, witness=witness)


def equal(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    witness = equality_witness(workspace.resolve_set(args.left), workspace.resolve_set(args.right), profile)
    return Outcome("equal", witness is None, ok=witness is None, witness=witness)


def score_cells(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    soft_set: SoftSet = workspace.resolve_set(args.set)
    scores = [(f"{parameter}/{obj}", str(score(value))) for parameter, obj, value in soft_set.iter_cells()]
    return Outcome("score", scores)


def validate(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    report = TopologyService(profile).validate_topology(workspace.family(args.topology))
    return Outcome(
        "validate",
        "valid" if report.valid else "invalid",
        ok=report.valid,
        violations=report.violations,
    )


def closure(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    service = TopologyService(profile)
    hull = service.closure_with_terms(workspace.family(args.topology), workspace.resolve_set(args.set))
    outcome = Outcome("closure", hull.value, witness=list(hull.contributors))
    _warn_if_invalid(service, workspace, args.topology, outcome)
    return outcome


def interior(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    service = TopologyService(profile)
    hull = service.interior_with_terms(workspace.family(args.topology), workspace.resolve_set(args.set))
    outcome = Outcome("interior", hull.value, witness=list(hull.contributors))
    _warn_if_invalid(service, workspace, args.topology, outcome)
    return outcome


def closed_sets(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    closed = TopologyService(profile).closed_members(workspace.family(args.topology))
    return Outcome("closed-sets", closed)


def compare(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    comparison = TopologyService(profile).compare_topologies(
        workspace.family(args.first), workspace.family(args.second)
    )
    return Outcome("compare", comparison, ok=comparison is not TopologyComparison.INCOMPARABLE)


def point(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    found = as_point(workspace.resolve_set(args.set))
    if found is None:
        return Outcome("point", "not a point", ok=False)
    return Outcome("point", found.at)


def point_in(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    inside = TopologyService(profile).point_in(_point(workspace, args.point), workspace.resolve_set(args.set))
    return Outcome("in", inside, ok=inside)


def nbd(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    witness = TopologyService(profile).nbd_witness_of_point(
        workspace.family(args.topology), workspace.resolve_set(args.set), _point(workspace, args.point)
    )
    return Outcome("nbd", witness is not None, ok=witness is not None, witness=witness)


def nbd_system(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    service = TopologyService(profile)
    family = workspace.family(args.topology)
    pool = service.neighborhood_pool(family)
    flags = service.nbd_system(family, _point(workspace, args.point), [soft_set for _, soft_set in pool])
    return Outcome("nbd-system", [(name, flag) for (name, _), flag in zip(pool, flags)])


def nbd_of_set(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    witness = TopologyService(profile).nbd_witness_of_set(
        workspace.family(args.topology), workspace.resolve_set(args.set), workspace.resolve_set(args.inner)
    )
    return Outcome("nbd-of-set", witness is not None, ok=witness is not None, witness=witness)


def list_fixtures(args: Namespace, workspace: Workspace, profile: OrderProfile) -> Outcome:
    return Outcome("fixtures", list(FIXTURE_NAMES))
