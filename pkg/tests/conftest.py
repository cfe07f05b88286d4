"""Shared test configuration: hypothesis profiles, fixtures, failure dumps."""
import os
import re

import pytest
import structlog
from hypothesis import HealthCheck, settings as hypothesis_settings

from ivhfs.core.config import settings
from ivhfs.core.logging import setup_logging
from ivhfs.fixtures import load_fixture
from ivhfs.services.workspace_service import Workspace, dump_workspace

logger = structlog.get_logger(__name__)

hypothesis_settings.register_profile(
    "thorough",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture, HealthCheck.filter_too_much],
)
hypothesis_settings.register_profile(
    "quick",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture, HealthCheck.filter_too_much],
)
hypothesis_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "thorough"))

setup_logging()


class FailureRecorder:
    """Keeps the most recent generated instance; hypothesis replays the minimal one last."""

    def __init__(self, node_id: str):
        self.node_id = node_id
        self.workspace = None

    def record(self, workspace: Workspace) -> None:
        self.workspace = workspace

    def dump(self):
        if self.workspace is None:
            return None
        settings.FAILURE_DUMP_DIR.mkdir(parents=True, exist_ok=True)
        path = settings.FAILURE_DUMP_DIR / (re.sub(r"[^A-Za-z0-9_.-]+", "_", self.node_id) + ".json")
        path.write_text(dump_workspace(self.workspace), encoding="utf-8")
        return path


@pytest.fixture
def failure_dump(request):
    recorder = FailureRecorder(request.node.nodeid)
    request.node.failure_recorder = recorder
    return recorder


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    recorder = getattr(item, "failure_recorder", None)
    if report.when == "call" and report.failed and recorder is not None:
        path = recorder.dump()
        if path is not None:
            logger.error("Failing case written", path=str(path))
            report.sections.append(("replayable workspace", str(path)))


@pytest.fixture(scope="session")
def example_3_5():
    return load_fixture("example_3_5")


@pytest.fixture(scope="session")
def example_3_19():
    return load_fixture("example_3_19_to_3_26")


@pytest.fixture(scope="session")
def prop_3_3():
    return load_fixture("prop_3_3")
