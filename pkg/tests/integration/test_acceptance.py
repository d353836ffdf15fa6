"""
Acceptance Campaign
Full-scale runs of every check; deselected by default, run with ``pytest -m slow``
"""
import json

import pytest

from config.base import DefaultConfig
from irregularity.services.enumeration import EnumerationService
from irregularity.services.verification import VerificationService
from irregularity.views import cli


@pytest.mark.slow
@pytest.mark.integration
class TestAcceptance:
    """Default-scale acceptance suite"""

    def test_all_checks_pass(self):
        results = VerificationService(DefaultConfig).run_all(tree_n=12, sweep_n=7)
        failed = [result.to_dict() for result in results if not result.passed]
        assert failed == []

    def test_spectrum_up_to_seven(self):
        report = EnumerationService(DefaultConfig).sweep_connected(7)
        attained = set(report.attained)
        assert {0, 6, 8, 10, 16, 18, 20, 22, 24} <= attained
        assert not attained & {2, 4, 12, 14}
        assert report.odd_values == []

    def test_verify_all_command(self, runner):
        result = runner.invoke(cli, ['verify-all', '--workers', '2'])
        assert result.exit_code == 0
        assert {row['status'] for row in json.loads(result.output)} == {'PASS'}
