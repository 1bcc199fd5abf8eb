# encoding: utf-8

'''🧮 Global Integrals: tests for the command line.'''

from jpl.automorphic.integrals.main import main
import json, pytest


def _run(capsys, argv, *args) -> tuple[int, str]:
    argv(*args)
    with pytest.raises(SystemExit) as caught:
        main()
    return caught.value.code, capsys.readouterr().out


def test_orbit_dim(capsys, argv):
    code, out = _run(capsys, argv, 'orbit-dim', '--group', 'E7', 'E7(a2)')
    assert code == 0
    payload = json.loads(out)
    assert payload['dim'] == 122
    assert payload['half_dim'] == 61


def test_orbit_dim_classical(capsys, argv):
    code, out = _run(capsys, argv, 'orbit-dim', '--group', 'gsp', '3,3')
    assert code == 0
    assert json.loads(out)['dim'] == 14


@pytest.mark.parametrize('args', [
    ('orbit-dim', '--group', 'GSp', '3,1'),
    ('orbit-dim', '--group', 'E6', 'E9'),
    ('inducing', '--group', 'GL', '--target', '5,3', '--p', '3'),
    ('weyl', '--p', '2', '--r', '4'),
])
def test_bad_input_exits_2(capsys, argv, args):
    code, out = _run(capsys, argv, *args)
    assert code == 2
    assert out == ''


def test_argparse_rejects_bad_ranges(capsys, argv):
    code, _ = _run(capsys, argv, 'classify', '--m', '2', '--params', '0..3')
    assert code == 2


def test_induce(capsys, argv):
    code, out = _run(capsys, argv, 'induce', '--group', 'GL', '--tau1', '2,1', '--tau2', '2,1')
    assert code == 0
    payload = json.loads(out)
    assert payload['orbit'] == [4, 2]
    assert payload['valid']


def test_inducing(capsys, argv):
    code, out = _run(capsys, argv, 'inducing', '--group', 'GL', '--target', '5,3', '--p', '4')
    assert code == 0
    payload = json.loads(out)
    assert payload['closed_form']
    assert payload['missing'] == payload['extra'] == []
    assert payload['data']


def test_weyl_check(capsys, argv):
    code, out = _run(capsys, argv, 'weyl', '--p', '2', '--r', '3', '--check', '--concurrency', '1')
    assert code == 0
    payload = json.loads(out)
    assert payload['ok']
    assert payload['found'] == [[1, 3, 4, 2], [2, 3, 4, 1]]


def test_weyl_list(capsys, argv):
    code, out = _run(capsys, argv, 'weyl', '--p', '2', '--r', '2', '--concurrency', '1')
    assert code == 0
    assert len(json.loads(out)['admissible']) == 3


def test_tables(capsys, argv):
    code, out = _run(capsys, argv, 'tables', '--m', '2', '--concurrency', '1')
    assert code == 0
    assert out.endswith('**✅ All tables matched**\n')


def test_tables_fail_without_the_cuspidal_exclusion(capsys, argv):
    code, out = _run(capsys, argv, 'tables', '--m', '3', '--lift-cuspidal-exclusion', '--concurrency', '1')
    assert code == 1
    assert out.endswith('**💥 Tables do not match**\n')


def test_classify(capsys, argv):
    code, out = _run(capsys, argv, 'classify', '--m', '2', '--concurrency', '1')
    assert code == 0
    payload = json.loads(out)
    assert payload['ok']
    assert all(row['total'] == 3 for row in payload['rows'])


def test_label(capsys, argv):
    code, out = _run(capsys, argv, 'label', '--m', '2', '--params', '1..3', '--concurrency', '1')
    assert code == 0
    counts = json.loads(out)['counts']
    assert counts['unknown'] == 0
    assert sum(counts.values()) > 0


def test_verify_roots(capsys, argv):
    code, out = _run(capsys, argv, 'verify-roots')
    assert code == 0
    assert out.startswith('# Verification report')


def test_verify_all_subset(capsys, argv):
    code, out = _run(capsys, argv, 'verify-all', '--only', 'roots', 'orbits', '--emit', 'json', '--concurrency', '1')
    assert code == 0
    assert json.loads(out)['ok']


def test_output_file(capsys, argv, tmp_path):
    target = tmp_path / 'd4.json'
    code, out = _run(capsys, argv, '--output', str(target), 'orbit-dim', '--group', 'E6', 'D4')
    assert code == 0
    assert out == ''
    assert json.loads(target.read_text())['dim'] == 60


def test_unwritable_output(capsys, argv, tmp_path):
    code, _ = _run(capsys, argv, '--output', str(tmp_path / 'missing' / 'd4.json'), 'orbit-dim', '--group', 'E6', 'D4')
    assert code == 2


def test_verify_all_accepts_the_older_switch_name(capsys, argv):
    code, out = _run(capsys, argv, 'verify-all', '--disable-lemma1', '--only', 'tables', '--m', '3', '--concurrency', '1')
    assert code == 1
    assert out.startswith('# Verification report')
