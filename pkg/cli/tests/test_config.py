""" Testes da configuração da linha de comando """
import logging

import pytest

from cli.comandos import build_parser
from cli.config import RunConfig, configure_logging
from matrizes.erros import DomainError


def _config(*argv):
    return RunConfig.from_args(build_parser().parse_args(list(argv)))


def test_valores_padrao(mocker):
    mocker.patch.dict('os.environ', {}, clear=True)
    config = _config('verify', '--n', '2')
    assert (config.workers, config.budget, config.stall) == (1, 1000000, 64)
    assert config.output_format == 'table' and not config.force_large


def test_ambiente_sobrepoe_padrao(mocker):
    mocker.patch.dict('os.environ', {'SPERM_WORKERS': '6', 'SPERM_BUDGET': '250', 'SPERM_STALL': '9'})
    config = _config('generate', '--n', '3', '--seed', '1')
    assert (config.workers, config.budget, config.stall) == (6, 250, 9)


def test_flag_sobrepoe_ambiente(mocker):
    mocker.patch.dict('os.environ', {'SPERM_WORKERS': '6'})
    assert _config('verify', '--n', '2', '--workers', '2').workers == 2


@pytest.mark.parametrize('argv', [
    ('verify', '--n', '0'),
    ('verify', '--n', '2', '--workers', '-1'),
    ('generate', '--n', '2', '--seed', '-5'),
    ('generate', '--n', '2', '--seed', str(2 ** 64)),
    ('verify', '--n', '2', '--workers', '0'),
    ('generate', '--n', '2', '--seed', '1', '--budget', '0'),
    ('generate', '--n', '2', '--seed', '1', '--stall', '0'),
    ('experiment', '--n', '2', '--runs', '0'),
])
def test_valores_invalidos(argv):
    with pytest.raises(DomainError):
        _config(*argv)


def test_logging_em_arquivo(mocker, tmp_path):
    """
    LOG_FILE e LOG_LEVEL chegam ao basicConfig.
    """
    mocker.patch.dict('os.environ', {'LOG_FILE': str(tmp_path / 'app.log'), 'LOG_LEVEL': 'debug'})
    basic = mocker.patch('cli.config.logging.basicConfig')
    configure_logging()
    basic.assert_called_once_with(filename=str(tmp_path / 'app.log'), level=logging.DEBUG,
                                  format='%(asctime)s - %(message)s')


def test_zero_na_flag_nao_cai_no_ambiente(mocker):
    """
    --workers 0 é rejeitado mesmo com SPERM_WORKERS definido.
    """
    mocker.patch.dict('os.environ', {'SPERM_WORKERS': '6', 'SPERM_BUDGET': '250'})
    with pytest.raises(DomainError):
        _config('verify', '--n', '2', '--workers', '0')
    with pytest.raises(DomainError):
        _config('generate', '--n', '2', '--seed', '1', '--budget', '0')


def test_ambiente_nao_inteiro(mocker):
    mocker.patch.dict('os.environ', {'SPERM_WORKERS': 'muitos'})
    with pytest.raises(DomainError):
        _config('verify', '--n', '2')


def test_sorteio_entre_compativeis(mocker):
    mocker.patch.dict('os.environ', {}, clear=True)
    assert _config('generate', '--n', '3', '--seed', '1', '--compatible-pool').compatible_pool
    assert not _config('generate', '--n', '3', '--seed', '1').compatible_pool
    assert not _config('verify', '--n', '2').compatible_pool
