"""Replay every claim of the bundled fixtures and print a pass/fail table."""
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from ivhfs.core.logging import setup_logging
from ivhfs.fixtures.replay import CLAIMS, replay


def main() -> int:
    setup_logging()
    failures = 0
    current = None
    for claim in CLAIMS:
        if claim.fixture != current:
            current = claim.fixture
            print(f"\n{current}")
        passed = replay(claim)
        failures += not passed
        print(f"  [{'pass' if passed else 'FAIL'}] ({claim.profile.cli_name}) {claim.description}")
    print(f"\n{len(CLAIMS) - failures}/{len(CLAIMS)} claims reproduced")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
