import json

import pytest

from ncmotzkin import cli
from ncmotzkin import convolution as cv


def run(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    out, err = capsys.readouterr()
    return exc.value.code, out, err


def test_words_single(capsys):
    code, out, _ = run(capsys, 'words', '--n', '1')
    assert code == 0
    assert out == '1\n'


def test_words_list(capsys):
    code, out, _ = run(capsys, 'words', '--n', '4')
    assert code == 0
    assert out.splitlines() == ['1111', '1121', '1211', '1221']


def test_words_json(capsys):
    code, out, _ = run(capsys, 'words', '--n', '3', '--json')
    assert code == 0
    assert json.loads(out) == [{'letters': [1, 1, 1]},
                               {'letters': [1, 2, 1]}]


def test_words_labels(capsys):
    code, out, _ = run(capsys, 'words', '--n', '3', '--labels', '112')
    assert code == 0
    assert out.splitlines() == ['111']


def test_adapted_count(capsys):
    code, out, _ = run(capsys, 'adapted', '--word', '12221', '--irr',
                       '--count')
    assert code == 0
    assert out == '13\n'


def test_adapted_listing(capsys):
    code, out, _ = run(capsys, 'adapted', '--word', '121', '--irr')
    assert code == 0
    assert out.splitlines() == ['{{1,2,3}}', '{{1,3},{2}}']


def test_adapted_json(capsys):
    code, out, _ = run(capsys, 'adapted', '--word', '121', '--monotone',
                       '--irr', '--json')
    assert code == 0
    assert json.loads(out) == [{'word': [1, 2, 1],
                                'blocks': [[1, 3], [2]]}]


def test_adapted_dot(capsys, tmp_path):
    path = tmp_path / 'out.dot'
    code, out, _ = run(capsys, 'adapted', '--word', '1221', '--dot',
                       str(path), '--count')
    assert code == 0
    text = path.read_text()
    assert text.startswith('digraph {')
    assert '"{{1,4},{2,3}}" -> "{{1,2,3,4}}";' in text


def test_zero_hat(capsys):
    code, out, _ = run(capsys, 'zero-hat', '--word', '11221')
    assert code == 0
    assert out == '{{1},{2,5},{3},{4}}\n'


def test_poset_count(capsys):
    code, out, _ = run(capsys, 'poset', '--n', '3', '--irr', '--count')
    assert code == 0
    assert out == '3\n'


def test_cumulants_decompose(capsys):
    code, out, _ = run(capsys, 'cumulants', 'decompose', '--n', '3')
    assert code == 0
    assert out.splitlines() == [
        '111: beta(x,x,x)',
        '121: -1*beta(x)*beta(x,x)',
    ]


def test_cumulants_decompose_json(capsys):
    code, out, _ = run(capsys, 'cumulants', 'decompose', '--n', '4',
                       '--json')
    assert code == 0
    rows = {tuple(r['w']): r['terms'] for r in json.loads(out)}
    assert rows[(1, 2, 2, 1)] == [
        {'coeff': '1', 'monomial': [['beta', 2, [1, 4]],
                                    ['beta', 1, [2]], ['beta', 1, [3]]]},
        {'coeff': '-1', 'monomial': [['beta', 2, [1, 4]],
                                     ['beta', 2, [2, 3]]]},
    ]


def test_cumulants_transform(capsys):
    code, out, _ = run(capsys, 'cumulants', 'transform', '--from', 'beta',
                       '--to', 'r', '--n', '2')
    assert code == 0
    assert out == 'beta(a1,a2)\n'


def test_replicas_moment(capsys):
    code, out, _ = run(capsys, 'replicas', 'moment', '--word', '11',
                       '--labels', '12', '--vars', 'a,b')
    assert code == 0
    assert out == 'm_1(a)*m_2(b)\n'


def test_replicas_moment_expectation_json(capsys):
    code, out, _ = run(capsys, 'replicas', 'moment', '--word', '121',
                       '--labels', '121', '--vars', 'a,b,a',
                       '--functional', 'E', '--json')
    assert code == 0
    data = json.loads(out)
    assert list(data) == ['components']
    assert data['components'][0]['projection'] == 1


def test_replicas_moment_bad_labels(capsys):
    code, _, err = run(capsys, 'replicas', 'moment', '--word', '11',
                       '--labels', '13', '--vars', 'a,b')
    assert code == 1
    assert 'error:' in err


def test_convolve(capsys, tmp_path):
    mu = cv.univariate_distribution([0, 1, 0, 1])
    path = tmp_path / 'mu.json'
    path.write_text(json.dumps(mu.to_json()))
    code, out, _ = run(capsys, 'convolve', '--mu1', str(path), '--mu2',
                       str(path), '--monomial', 'x,x,x,x')
    assert code == 0
    assert out == '6\n'
    code, out, _ = run(capsys, 'convolve', '--mu1', str(path), '--mu2',
                       str(path), '--monomial', 'x,x,x,x', '--by-path')
    assert code == 0
    assert out.splitlines() == ['1111: 4', '1121: 0', '1211: 0', '1221: 2']


def test_convolve_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, 'convolve', '--mu1', 'missing.json',
                       '--mu2', 'missing.json', '--monomial', 'x')
    assert code == 1
    assert 'error:' in err


def test_syt_word_to_tableau(capsys):
    code, out, _ = run(capsys, 'syt', '--word', '12321')
    assert code == 0
    assert out == '[[1,2],[3,4]]\n'


def test_syt_tableau_to_word(capsys):
    code, out, _ = run(capsys, 'syt', '--tableau', '[[1,2],[3,4]]')
    assert code == 0
    assert out == '12321\n'


def test_syt_requires_one_input(capsys):
    code, _, err = run(capsys, 'syt')
    assert code == 1


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, 'words', '--n', '0')
    assert code == 1
    assert err.startswith('error:')


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, 'nonsense')
    assert code == 2


def test_deterministic_output(capsys):
    _, first, _ = run(capsys, 'cumulants', 'decompose', '--n', '5')
    _, second, _ = run(capsys, 'cumulants', 'decompose', '--n', '5')
    assert first == second
