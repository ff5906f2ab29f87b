""" Testes da linha de comando """
import json
import logging

import pytest

from cli.comandos import CHECK_FAILED, EXHAUSTED, OK, TOO_LARGE, USAGE_ERROR, main
from cli.config import SCHEMA_VERSION
from oraculo.verificacao import FAIL, CheckResult, VerificationReport
from sudoku.familias import is_sudoku


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_formulas_n2_com_constantes(capsys):
    """
    Para n = 2 a tabela mostra as cotas e as constantes publicadas com procedência.
    """
    assert main(['formulas', '--n', '2']) == OK
    saida = capsys.readouterr().out
    assert 'xi_lower' in saida and 'paper_constant' in saida
    assert '3/5 (≈ 0.600)' in saida


def test_formulas_n3_json(capsys):
    assert main(['formulas', '--n', '3', '--output-format', 'json']) == OK
    envelope = _json(capsys)
    assert envelope['schema_version'] == SCHEMA_VERSION
    assert envelope['command'] == 'formulas'
    resultado = envelope['result']
    assert (resultado['nu'], resultado['r'], resultado['xi_exact']) == ('8000', '19008', '27008')
    assert resultado['xi_lower'] == '3392'
    assert resultado['provenance']['r'] == 'paper_constant'


def test_formulas_n5_somente_cotas(capsys):
    assert main(['formulas', '--n', '5', '--output-format', 'json']) == OK
    resultado = _json(capsys)['result']
    assert 'xi_exact' not in resultado and 'xi_lower' in resultado


def test_formulas_reticulado(capsys):
    assert main(['formulas', '--n', '2', '--source', 'lattice', '--output-format', 'json']) == OK
    assert _json(capsys)['result']['xi_exact'] == '7'


def test_formulas_oraculo_grande(capsys):
    assert main(['formulas', '--n', '4', '--source', 'oracle']) == TOO_LARGE


def test_verify_n2(capsys):
    assert main(['verify', '--n', '2', '--output-format', 'json']) == OK
    resultado = _json(capsys)['result']
    assert resultado['passed'] is True
    assert all('elapsed_ms' not in c for c in resultado['checks'])


@pytest.mark.parametrize('n', [2, pytest.param(3, marks=pytest.mark.slow)])
def test_verify_json_independe_de_workers(n, capsys):
    """
    A saída JSON de verify é idêntica byte a byte com 1, 4 e 16 processos.
    """
    saidas = []
    for workers in ('1', '4', '16'):
        assert main(['verify', '--n', str(n), '--workers', workers, '--output-format', 'json']) == OK
        saidas.append(capsys.readouterr().out)
    assert saidas[0] == saidas[1] == saidas[2]


def test_verify_n4_recusado(capsys, caplog):
    caplog.set_level(logging.ERROR)
    assert main(['verify', '--n', '4']) == TOO_LARGE
    assert '--force-large' in capsys.readouterr().err
    assert 'Recusado' in caplog.text


def test_verify_falha_retorna_1(mocker, capsys):
    relatorio = VerificationReport(2, 'exhaustive', (CheckResult('xi_invariance', 2, '7', '8', FAIL),))
    mocker.patch('cli.comandos.VerificationSuite').return_value.run.return_value = relatorio
    assert main(['verify', '--n', '2']) == CHECK_FAILED
    assert '1 falha(s)' in capsys.readouterr().out


def test_generate_exige_semente():
    with pytest.raises(SystemExit) as erro:
        main(['generate', '--n', '2'])
    assert erro.value.code == USAGE_ERROR


def test_generate_arquivos_reprodutiveis(tmp_path, capsys):
    """
    As mesmas flags produzem arquivos idênticos byte a byte.
    """
    for pasta in ('a', 'b'):
        (tmp_path / pasta).mkdir()
        assert main(['generate', '--n', '2', '--k', '4', '--seed', '1',
                     '--output', str(tmp_path / pasta / 'saida')]) == OK
    for sufixo in ('saida.family.json', 'saida.sudoku.txt'):
        assert (tmp_path / 'a' / sufixo).read_bytes() == (tmp_path / 'b' / sufixo).read_bytes()
    tabela = [[int(x) for x in linha.split()] for linha in (tmp_path / 'a' / 'saida.sudoku.txt').read_text().split('\n')
              if linha]
    assert is_sudoku(tabela)
    assert json.loads((tmp_path / 'a' / 'saida.family.json').read_text())['k'] == 4
    assert 'sorteios' in capsys.readouterr().out


def test_generate_parcial_sem_sudoku(capsys):
    assert main(['generate', '--n', '3', '--k', '2', '--seed', '4', '--output-format', 'json']) == OK
    resultado = _json(capsys)['result']
    assert resultado['family']['k'] == 2 and resultado['sudoku'] is None


def test_generate_esgotado(capsys):
    assert main(['generate', '--n', '3', '--seed', '0', '--budget', '1']) == EXHAUSTED


def test_generate_k_invalido(capsys):
    assert main(['generate', '--n', '2', '--k', '7', '--seed', '0']) == USAGE_ERROR


def test_enumerate_n2_json(capsys):
    assert main(['enumerate', '--n', '2', '--output-format', 'json']) == OK
    linhas = capsys.readouterr().out.strip().split('\n')
    assert len(linhas) == 17
    assert json.loads(linhas[-1])['count'] == 16
    assert json.loads(linhas[0])['row_off'] == [[0, 1], [0, 1]]


def test_enumerate_em_arquivo(tmp_path):
    destino = tmp_path / 'sigma.txt'
    assert main(['enumerate', '--n', '1', '--output', str(destino)]) == OK
    assert destino.read_text().strip().split('\n')[-1] == 'total: 1'


def test_enumerate_grande_recusado():
    assert main(['enumerate', '--n', '4']) == TOO_LARGE


def test_experiment(capsys):
    assert main(['experiment', '--n', '2', '--runs', '3', '--seed', '5', '--budget', '100000',
                 '--output-format', 'json']) == OK
    resultado = _json(capsys)['result']
    assert resultado['runs'] == 3 and resultado['successes'] == 3


def test_relatorio_em_arquivo(tmp_path, capsys):
    destino = tmp_path / 'formulas.json'
    assert main(['formulas', '--n', '2', '--output-format', 'json', '--output', str(destino)]) == OK
    assert capsys.readouterr().out == ''
    assert json.loads(destino.read_text())['result']['nu'] == '9'


@pytest.mark.parametrize('argv', [
    ['verify', '--n', '2', '--workers', '0'],
    ['generate', '--n', '2', '--seed', '1', '--budget', '0'],
])
def test_zero_e_erro_de_uso(argv, mocker, capsys):
    mocker.patch.dict('os.environ', {'SPERM_WORKERS': '6'})
    assert main(argv) == USAGE_ERROR
    assert 'erro:' in capsys.readouterr().err


def test_generate_entre_compativeis(capsys):
    assert main(['generate', '--n', '2', '--seed', '3', '--compatible-pool', '--output-format', 'json']) == OK
    resultado = _json(capsys)['result']
    assert resultado['family']['k'] == 4 and resultado['draws'] >= 4


def test_generate_entre_compativeis_n_grande(capsys):
    assert main(['generate', '--n', '4', '--k', '2', '--seed', '3', '--compatible-pool']) == USAGE_ERROR


def test_enumerate_denso(capsys):
    """
    --dense acrescenta a imagem 0/1 de cada matriz, em json e em tabela.
    """
    assert main(['enumerate', '--n', '2', '--dense', '--output-format', 'json']) == OK
    linhas = capsys.readouterr().out.strip().split('\n')
    assert json.loads(linhas[0])['dense'] == ['1000', '0010', '0100', '0001']
    assert all(len(json.loads(linha)['dense']) == 4 for linha in linhas[:-1])

    assert main(['enumerate', '--n', '1', '--dense']) == OK
    assert capsys.readouterr().out == '0 [[0]] [[0]]\n1\ntotal: 1\n'
