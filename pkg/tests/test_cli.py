import json

import pytest

import config
import src.cli as cli
from src.cli import main
from src.reports.models import (
    AtlasIndex, AtlasRecord, AtlasRunReport, CompositionReport, PatternReport, TableauReport,
    VerificationReport, report_schema,
)
from src.reports.verification import SuiteResult, VerificationSummary


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestShape:
    def test_json(self, capsys):
        code, out, _ = run(capsys, 'shape', '2,2,1,1', '--json')
        data = json.loads(out)
        assert code == 0
        assert data['summary']['BC'] == 6
        assert data['summary']['singular'] == 1
        assert data['tool_version'] == f"{config.TOOL_NAME} {config.TOOL_VERSION}"

    def test_no_stamp(self, capsys):
        _, out, _ = run(capsys, 'shape', '2,1', '--json', '--no-stamp')
        assert json.loads(out)['tool_version'] is None

    def test_text(self, capsys):
        code, out, _ = run(capsys, 'shape', '3,2,2')
        assert code == 0
        assert out.startswith('# springer-kit')
        assert 'dim B_u = 6' in out

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, 'shape', '2,3')
        assert code == 1
        assert "'3'" in err

    def test_bound(self, capsys, monkeypatch):
        monkeypatch.setattr(config, 'MAX_N', 4)
        code, _, err = run(capsys, 'shape', '3,2')
        assert code == 2
        assert 'exceeds bound 4' in err


class TestComposition:
    def test_json(self, capsys):
        code, out, _ = run(capsys, 'composition', '1,2,2,1', '--json', '--no-stamp')
        data = json.loads(out)
        assert code == 0
        assert data['singular']['verdict'] == 'singular'
        assert data['dim'] == 7
        assert data['tool_version'] is None

    def test_text(self, capsys):
        _, out, _ = run(capsys, 'composition', '2,3,1,2', '--no-stamp')
        assert 'contains (2,3,2) at positions (1,2,4)' in out

    def test_long_composition(self, capsys):
        pi = ','.join(['1'] * 11 + ['2'] * 11)
        code, out, _ = run(capsys, 'composition', pi, '--json')
        data = json.loads(out)
        assert code == 0
        assert data['dual_bundle_base'] == [1] * 11
        assert data['singular']['witness'] == {'pattern': [1, 2, 2, 1], 'indices': [1, 12, 13, 14]}


class TestPattern:
    def test_json(self, capsys):
        code, out, _ = run(capsys, 'pattern', '1 3 | 2', '--json')
        data = json.loads(out)
        assert code == 0
        assert data['in_pi1'] is False
        assert data['nesting_violations'] == [[[2], [1, 3]]]
        assert data['orbit']['dense'] is False

    def test_ascii(self, capsys):
        _, out, _ = run(capsys, 'pattern', '1 3 | 2', '--render', 'ascii', '--no-stamp')
        assert '+-------+' in out

    def test_svg_file(self, capsys, tmp_path):
        path = tmp_path / 'p.svg'
        code, _, _ = run(capsys, 'pattern', '1 2 | 3', '--render', 'svg', '--out', str(path))
        assert code == 0
        assert path.read_text(encoding='utf-8').startswith('<?xml')

    def test_html_needs_out(self, capsys):
        code, _, err = run(capsys, 'pattern', '1 2 | 3', '--render', 'html')
        assert code == 1
        assert '--out' in err

    def test_invalid_pattern(self, capsys):
        code, _, _ = run(capsys, 'pattern', '1 2 | 2 3')
        assert code == 1


class TestTableau:
    def test_json(self, capsys):
        code, out, _ = run(capsys, 'tableau', '1 3 / 2', '--json')
        data = json.loads(out)
        assert code == 0
        assert data['shape'] == [2, 1]
        assert data['singular']['verdict'] == 'smooth'

    def test_invalid(self, capsys):
        code, _, _ = run(capsys, 'tableau', '2 1')
        assert code == 1


class TestAtlasAndVerify:
    def test_atlas(self, capsys, tmp_path):
        code, out, _ = run(capsys, 'atlas', '--max-n', '3', '--out-dir', str(tmp_path), '--json')
        assert code == 0
        assert len(json.loads(out)['files']) == 7
        assert (tmp_path / 'index.json').exists()

    def test_verify(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'evacuation', '--max-n', '4', '--json')
        assert code == 0
        assert json.loads(out)['passed'] is True

    def test_verify_failure(self, capsys, monkeypatch):
        failing = VerificationSummary([SuiteResult('dims', (1,), checks=1, failures=['boom'])])
        monkeypatch.setattr(cli, 'run_verification', lambda *args, **kwargs: failing)
        code, out, err = run(capsys, 'verify', '--max-n', '1')
        assert code == 3
        assert 'boom' in out
        assert 'boom' in err


class TestMisc:
    def test_schema(self, capsys):
        code, out, _ = run(capsys, 'schema')
        assert code == 0
        assert json.loads(out) == report_schema()

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, 'frobnicate')
        assert code == 1

    def test_missing_argument(self, capsys):
        code, _, _ = run(capsys, 'atlas', '--max-n', '3')
        assert code == 1


class TestJsonMatchesSchema:
    @pytest.mark.parametrize('argv, model', [
        (['shape', '2,2,1,1'], AtlasRecord),
        (['composition', '2,3,1,2'], CompositionReport),
        (['pattern', '1 2 5 | 3 4 | 6 7'], PatternReport),
        (['tableau', '1 3 / 2 5 / 4 / 6'], TableauReport),
        (['verify', '--suite', 'dims', '--max-n', '3'], VerificationReport),
    ])
    def test_output_validates(self, capsys, argv, model):
        code, out, _ = run(capsys, *argv, '--json')
        assert code == 0
        report = model.model_validate(json.loads(out))
        assert report.tool_version == f"{config.TOOL_NAME} {config.TOOL_VERSION}"
        assert f"#/$defs/{model.__name__}" in {e['$ref'] for e in report_schema()['anyOf']}

    def test_atlas_outputs_validate(self, capsys, tmp_path):
        code, out, _ = run(capsys, 'atlas', '--max-n', '2', '--out-dir', str(tmp_path), '--json')
        assert code == 0
        assert AtlasRunReport.model_validate(json.loads(out)).files[-1] == 'index.json'
        with open(tmp_path / 'index.json', encoding='utf-8') as f:
            assert len(AtlasIndex.model_validate(json.load(f)).shapes) == 3
        with open(tmp_path / 'atlas_1-1.json', encoding='utf-8') as f:
            assert AtlasRecord.model_validate(json.load(f)).n == 2

    def test_pattern_orbit(self, capsys):
        _, out, _ = run(capsys, 'pattern', '1 5 | 2 3 4 | 6 7', '--json')
        report = PatternReport.model_validate(json.loads(out))
        assert report.in_pi1
        assert report.orbit.dense
        assert report.orbit.codimension == 0
