"""Command line behavior: output shape, determinism, exit codes."""

import json

import pytest

from quantales import cli, io, suite


@pytest.fixture()
def d12_file(tmp_path, d12):
    path = tmp_path / 'D12.json'
    path.write_text(io.emit_instance(d12, 'zn:12'), encoding='utf-8')
    return str(path)


def test_analyze_reports_structure(capsys, d12_file):
    assert cli.main(['analyze', d12_file]) == 0
    out = capsys.readouterr().out
    assert 'instance: D12 (6 elements)' in out
    assert 'm-primes: 2, 3' in out
    assert 'rho(12) = 6' in out
    assert 'jacobson radical: 6' in out
    assert 'lifting=True' in out and 'semiprime=False' in out
    assert 'local factorization: idempotents 4, 3' in out


def test_analyze_missing_file_exits_2(capsys):
    assert cli.main(['analyze', '/no/such/file.json']) == 2
    assert 'error' in capsys.readouterr().err


def test_analyze_invalid_instance_exits_2(capsys, tmp_path):
    bad = tmp_path / 'bad.json'
    bad.write_text('{"elements": ["a", "b"], "leq": [], "mul": []}')
    assert cli.main(['analyze', str(bad)]) == 2
    assert 'error' in capsys.readouterr().err


def test_verify_fixtures_passes(capsys):
    assert cli.main(['verify', 'fixtures', '--no-timings']) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].startswith('result: PASS')
    assert 'REFUTED' not in out.splitlines()[-1]


def test_verify_runs_are_identical_modulo_timing(capsys):
    cli.main(['verify', 'fixtures'])
    first = capsys.readouterr().out
    cli.main(['verify', 'fixtures'])
    second = capsys.readouterr().out
    strip = lambda text: [l for l in text.splitlines() if not l.startswith('timing:')]
    assert strip(first) == strip(second)


def test_verify_selected_checks(capsys):
    assert cli.main(['verify', 'fixtures', '--theorems', 'radical-power-oracle',
                     '--no-timings']) == 0
    out = capsys.readouterr().out
    assert 'checks: 1, entries: 12' in out


def test_verify_unknown_check_exits_2(capsys):
    assert cli.main(['verify', 'fixtures', '--theorems', 'flux-capacitor']) == 2
    assert 'unknown checks' in capsys.readouterr().err


def test_verify_refutation_exits_1(capsys, d12_file, monkeypatch):
    def refuter(member):
        return suite.REFUTED, 'synthetic'

    monkeypatch.setitem(
        suite.CHECKS, 'test-refuter', suite.Check('test-refuter', '', refuter))
    assert cli.main(['verify', d12_file, '--theorems', 'test-refuter',
                     '--no-timings']) == 1
    out = capsys.readouterr().out
    assert 'result: REFUTED' in out


def test_verify_directory_corpus(capsys, tmp_path):
    for gen in ('chain:2,frame', 'boolean:2'):
        q = io.generate(gen)
        name = gen.replace(':', '_').replace(',', '_')
        (tmp_path / ('%s.json' % name)).write_text(io.emit_instance(q, gen))
    assert cli.main(['verify', str(tmp_path), '--theorems', 'quantale-axioms',
                     '--no-timings']) == 0
    assert 'entries: 2' in capsys.readouterr().out


def test_verify_empty_directory_exits_2(capsys, tmp_path):
    assert cli.main(['verify', str(tmp_path)]) == 2


def test_enumerate_lists_instances(capsys):
    assert cli.main(['enumerate', '--max-size', '3']) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == 'total: 4'
    assert out.splitlines()[0].startswith('E1.1')


def test_enumerate_above_bound_exits_2(capsys):
    assert cli.main(['enumerate', '--max-size', '9']) == 2


def test_enumerate_emits_instances(capsys, tmp_path):
    out_dir = tmp_path / 'emitted'
    assert cli.main(['enumerate', '--max-size', '2',
                     '--emit-dir', str(out_dir)]) == 0
    capsys.readouterr()
    files = sorted(p.name for p in out_dir.glob('*.json'))
    assert files == ['E1.1.json', 'E2.1.json']
    doc = json.loads((out_dir / 'E2.1.json').read_text())
    assert len(doc['elements']) == 2


def test_export_dot_views(capsys, d12_file):
    assert cli.main(['export-dot', d12_file]) == 0
    assert capsys.readouterr().out.startswith('digraph')
    assert cli.main(['export-dot', d12_file, '--view', 'spec']) == 0
    assert 'peripheries=2' in capsys.readouterr().out


def test_export_dot_bad_view_is_a_usage_error(d12_file):
    with pytest.raises(SystemExit) as err:
        cli.main(['export-dot', d12_file, '--view', 'orbit'])
    assert err.value.code == 2
