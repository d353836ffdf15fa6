"""
Command-Line Integration Tests
Subcommands, exit statuses, input formats and report formats
"""
import json

import pytest

from irregularity.models.graph import make_named_graph
from irregularity.services.verification import CheckResult, VerificationService
from irregularity.utils.edgelist import emit_edge_list
from irregularity.utils.graph6 import emit_graph6, parse_graph6
from irregularity.views import cli, run_cli


@pytest.mark.integration
class TestCompute:
    """compute"""

    def test_graph6_inline(self, invoke):
        result = invoke('compute', '--graph6', 'Bg')
        assert result.exit_code == 0
        assert json.loads(result.output) == {'albertson': 2, 'modified': 6, 'max_degree': 2}

    def test_per_edge(self, invoke):
        result = invoke('compute', '--graph6', 'Bg', '--per-edge')
        assert json.loads(result.output)['per_edge_terms'] == [[0, 1, 3], [1, 2, 3]]

    def test_formats_agree(self, invoke, tmp_path):
        star = make_named_graph('star', 6)
        g6_file = tmp_path / 'star.g6'
        g6_file.write_text('>>graph6<<' + emit_graph6(star) + '\n')
        edges_file = tmp_path / 'star.txt'
        edges_file.write_text(emit_edge_list(star))

        inline = invoke('compute', '--graph6', emit_graph6(star))
        from_g6 = invoke('compute', '--input', str(g6_file))
        from_edges = invoke('compute', '--input', str(edges_file), '--format', 'edgelist')
        assert inline.output == from_g6.output == from_edges.output
        assert json.loads(inline.output)['modified'] == 5 * 24

    def test_output_is_deterministic(self, invoke):
        first = invoke('compute', '--graph6', 'Bg', '--per-edge')
        second = invoke('compute', '--graph6', 'Bg', '--per-edge')
        assert first.output == second.output

    def test_csv(self, invoke):
        result = invoke('compute', '--graph6', 'Bg', '--csv')
        assert result.output.splitlines() == ['albertson,modified,max_degree', '2,6,2']

    def test_table(self, invoke):
        result = invoke('compute', '--graph6', 'Bg', '--table')
        assert result.output.splitlines()[1].split() == ['modified', '6']

    def test_timing(self, runner):
        result = runner.invoke(cli, ['--profile', 'testing', '--timing', 'compute', '--graph6', 'Bg'])
        assert 'elapsed_seconds' in json.loads(result.output)

    def test_both_sources_rejected(self, invoke, tmp_path):
        result = invoke('compute', '--graph6', 'Bg', '--input', str(tmp_path / 'g.g6'))
        assert result.exit_code == 1
        assert 'exactly one of --graph6 or --input' in result.output

    def test_missing_source(self, invoke):
        assert invoke('compute').exit_code == 1

    def test_format_error(self, invoke):
        result = invoke('compute', '--graph6', 'B')
        assert result.exit_code == 2
        assert 'error: graph6 data truncated' in result.output

    def test_missing_file(self, invoke, tmp_path):
        result = invoke('compute', '--input', str(tmp_path / 'absent.g6'))
        assert result.exit_code == 2
        assert 'cannot read' in result.output

    def test_oversized_edge_list(self, invoke, tmp_path):
        path = tmp_path / 'big.el'
        path.write_text('300000 0\n')
        result = invoke('compute', '--input', str(path), '--format', 'edgelist')
        assert result.exit_code == 2
        assert 'error: line 1: orders of 258048 or more are not supported' in result.output

    def test_empty_graph6_file(self, invoke, tmp_path):
        path = tmp_path / 'empty.g6'
        path.write_text('>>graph6<<\n\n')
        assert invoke('compute', '--input', str(path)).exit_code == 2


@pytest.mark.integration
class TestGraphOperations:
    """delta and transform"""

    def test_delta(self, invoke):
        result = invoke('delta', '--graph6', 'Bg', '--u', '0', '--v', '2')
        assert result.exit_code == 0
        assert json.loads(result.output) == {'u': 0, 'v': 2, 'delta': -6, 'before': 6, 'after': 0}

    def test_delta_on_edge(self, invoke):
        result = invoke('delta', '--graph6', 'Bg', '--u', '0', '--v', '1')
        assert result.exit_code == 1
        assert 'non-adjacent' in result.output

    def test_delta_vertex_range(self, invoke):
        assert invoke('delta', '--graph6', 'Bg', '--u', '0', '--v', '7').exit_code == 1

    def test_transform_cubic(self, invoke, tmp_path):
        out = tmp_path / 'subdivided.g6'
        prism = emit_graph6(make_named_graph('prism', 3))
        result = invoke('transform', '--graph6', prism, '--kind', 't1', '--u', '0', '--v', '1',
                        '--out', str(out))
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report['after'] - report['before'] == 10
        assert parse_graph6(out.read_text()).order == 7

    def test_transform_keeps_edge_list_format(self, invoke, tmp_path):
        source = tmp_path / 'path.txt'
        source.write_text(emit_edge_list(make_named_graph('path', 4)))
        out = tmp_path / 'longer.txt'
        result = invoke('transform', '--input', str(source), '--format', 'edgelist',
                        '--kind', 'neutral', '--u', '0', '--v', '1', '--out', str(out))
        assert result.exit_code == 0
        assert out.read_text().splitlines()[0] == '5 4'
        assert json.loads(result.output)['after'] == 6

    def test_transform_precondition(self, invoke):
        k4 = emit_graph6(make_named_graph('complete', 4))
        result = invoke('transform', '--graph6', k4, '--kind', 'neutral', '--u', '0', '--v', '1')
        assert result.exit_code == 1
        assert 'neutral subdivision requires' in result.output


@pytest.mark.integration
class TestConstructions:
    """family and realize"""

    def test_family(self, invoke):
        result = invoke('family', '--i', '2', '--j', '3')
        report = json.loads(result.output)
        assert report['modified'] == report['predicted'] == 36
        assert parse_graph6(report['graph6']).order == report['order']

    def test_family_invalid_variant(self, invoke):
        assert invoke('family', '--i', '0', '--j', '7').exit_code == 1

    def test_realize(self, invoke):
        result = invoke('realize', '--target', '22', '--count', '2')
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert len(lines) == 2
        for line in lines:
            text, value, order, _ = line.split('\t')
            assert value == 'A*=22'
            assert f"n={parse_graph6(text).order}" == order

    def test_realize_to_file(self, invoke, tmp_path):
        out = tmp_path / 'witnesses.g6'
        result = invoke('realize', '--target', '40', '--count', '3', '--out', str(out))
        assert result.exit_code == 0
        assert result.output == ''
        assert len(out.read_text().splitlines()) == 3

    @pytest.mark.parametrize('target', ['12', '2'])
    def test_realize_unsupported(self, invoke, target):
        result = invoke('realize', '--target', target)
        assert result.exit_code == 1
        assert 'no construction' in result.output

    def test_realize_odd(self, invoke):
        result = invoke('realize', '--target', '7')
        assert result.exit_code == 1
        assert 'must be even' in result.output


@pytest.mark.integration
class TestEnumerationCommands:
    """enumerate-trees, verify-trees, spectrum, verify-all"""

    def test_enumerate_trees_summary(self, invoke):
        report = json.loads(invoke('enumerate-trees', '--n', '6').output)
        assert report['tree_count'] == 6
        assert report['min_value'] == 6
        assert report['max_value'] == 120

    def test_enumerate_trees_graph6(self, invoke):
        lines = invoke('enumerate-trees', '--n', '7', '--emit-graph6').output.splitlines()
        assert len(lines) == 11
        assert all(parse_graph6(line).is_tree() for line in lines)

    def test_verify_trees(self, invoke):
        result = invoke('verify-trees', '--n', '5')
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert (report['min_value'], report['max_value']) == (6, 60)
        assert report['min_witnesses'] == report['max_witnesses'] == 1
        assert report['passed'] is True

    def test_verify_trees_small_order(self, invoke):
        assert invoke('verify-trees', '--n', '3').exit_code == 1

    def test_spectrum(self, invoke):
        result = invoke('spectrum', '--n-max', '4')
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report['attained'] == [0, 6, 18, 20, 24]
        assert report['evidence'] == 'empirical'

    def test_spectrum_cap(self, invoke):
        assert invoke('spectrum', '--n-max', '9').exit_code == 1

    def test_verify_all_failure_exit(self, invoke, mocker):
        mocker.patch.object(VerificationService, 'run_all', return_value=[
            CheckResult('parity', True, 'ok'),
            CheckResult('graph6-codec', False, 'mismatch', failures=['n=3 mask=5']),
        ])
        result = invoke('verify-all', '--table')
        assert result.exit_code == 1
        assert 'FAIL' in result.output

    def test_verify_all_forwards_options(self, invoke, mocker):
        run_all = mocker.patch.object(VerificationService, 'run_all', return_value=[
            CheckResult('parity', True, 'ok'),
        ])
        result = invoke('verify-all', '--tree-n', '6', '--sweep-n', '4', '--seed', '11')
        assert result.exit_code == 0
        run_all.assert_called_once_with(6, 4, 11)
        assert json.loads(result.output) == [{'check': 'parity', 'status': 'PASS', 'detail': 'ok'}]


@pytest.mark.integration
class TestDispatcher:
    """Usage errors and run_cli"""

    def test_unknown_subcommand(self, invoke):
        assert invoke('bogus').exit_code == 2

    def test_unknown_flag(self, invoke):
        assert invoke('compute', '--graph6', 'Bg', '--bogus').exit_code == 2

    def test_run_cli_success(self, capsys):
        assert run_cli(['--profile', 'testing', 'compute', '--graph6', 'Bg']) == 0
        assert json.loads(capsys.readouterr().out)['modified'] == 6

    def test_run_cli_statuses(self, capsys):
        assert run_cli(['--profile', 'testing', 'realize', '--target', '12']) == 1
        assert run_cli(['--profile', 'testing', 'compute', '--graph6', 'B']) == 2
        assert run_cli(['bogus']) == 2
        assert 'error:' in capsys.readouterr().err

    def test_version(self, invoke):
        result = invoke('--version')
        assert result.exit_code == 0
        assert '1.0.0' in result.output
