""" Testes das matrizes S-permutação: enumeração, imagem densa, validação e produto CAD """
import numpy as np
import pytest

from matrizes.bits import DenseBits
from matrizes.erros import DomainError, InvalidPermutation, NotSPermutation, SizeMismatch, TooLarge
from matrizes.permutacao import Perm
from matrizes.spermutacao import (CadFactors, SPermMatrix, cad_dense_factors, compose_cad, enumerate_factors,
                                  enumerate_sigma, factors_at, random_factors, random_sperm, sigma_size, sperm_at,
                                  to_dense, validate_sperm)


@pytest.fixture(scope='module')
def sigma_2():
    """
    Fixture com as 16 matrizes de Σ_4.
    """
    return list(enumerate_sigma(2))


@pytest.mark.parametrize('n, total', [(1, 1), (2, 16), (3, 46656)])
def test_tamanho_de_sigma(n, total):
    assert sigma_size(n) == total
    assert sum(1 for _ in enumerate_sigma(n)) == total


def test_enumeracao_distinta_e_valida(sigma_2):
    """
    Cada matriz enumerada passa na validação densa e nenhuma se repete.
    """
    imagens = {to_dense(a).bits for a in sigma_2}
    assert len(imagens) == 16
    for a in sigma_2:
        d = to_dense(a)
        assert d.popcount() == 4
        assert validate_sperm(d) == a


def test_primeira_matriz_tem_deslocamentos_identidade(sigma_2):
    a = sigma_2[0]
    assert all(p == Perm.identity(2) for p in a.row_off + a.col_off)
    assert list(a.cells()) == [(0, 0), (1, 2), (2, 1), (3, 3)]


def test_rank_e_sperm_at():
    for i in (0, 1, 777, 46655):
        assert sperm_at(3, i).rank == i
    assert list(enumerate_sigma(3, 10, 20)) == [sperm_at(3, i) for i in range(10, 20)]
    with pytest.raises(DomainError):
        sperm_at(2, 16)


def test_fatores_na_mesma_ordem():
    fatores = list(enumerate_factors(2))
    assert len(fatores) == 16
    assert fatores[5] == factors_at(2, 5)
    assert [f.rank for f in fatores] == list(range(16))


def test_enumeracao_grande_recusada():
    """
    Para n = 4 a enumeração exige override; com ele, o intervalo de índices ainda funciona.
    """
    with pytest.raises(TooLarge):
        next(enumerate_sigma(4))
    assert len(list(enumerate_sigma(4, 0, 3, allow_large=True))) == 3


def test_construcao_invalida():
    with pytest.raises(DomainError):
        SPermMatrix(0, (), ())
    with pytest.raises(InvalidPermutation):
        SPermMatrix(2, [(0, 1)], [(0, 1), (1, 0)])
    with pytest.raises(InvalidPermutation):
        SPermMatrix(2, [(0, 1), (0, 1, 2)], [(0, 1), (1, 0)])


def _imagem(linhas):
    return DenseBits.from_rows(linhas)


def test_validacao_aponta_linha():
    linhas = [list(r) for r in to_dense(sperm_at(2, 0)).as_rows()]
    linhas[0][1] = 1
    with pytest.raises(NotSPermutation) as erro:
        validate_sperm(_imagem(linhas))
    assert (erro.value.kind, erro.value.where, erro.value.count) == ('row', (0,), 2)


def test_validacao_aponta_coluna():
    linhas = [[1, 0, 0, 0] for _ in range(4)]
    with pytest.raises(NotSPermutation) as erro:
        validate_sperm(_imagem(linhas))
    assert (erro.value.kind, erro.value.where, erro.value.count) == ('column', (0,), 4)


def test_validacao_aponta_bloco():
    """
    A identidade 4×4 é matriz de permutação, mas o bloco (0, 0) tem dois 1s.
    """
    identidade = [[int(i == j) for j in range(4)] for i in range(4)]
    with pytest.raises(NotSPermutation) as erro:
        validate_sperm(_imagem(identidade))
    assert (erro.value.kind, erro.value.where, erro.value.count) == ('block', (0, 0), 2)


def test_cad_coincide_com_produto_denso():
    """
    compose_cad sobre deslocamentos reproduz C·A·D com as matrizes bloco-diagonais.
    """
    rng = np.random.default_rng(2024)
    for n in (2, 3):
        for _ in range(50):
            a = random_sperm(n, rng)
            f = random_factors(n, rng)
            c, d = cad_dense_factors(f)
            esperado = c @ to_dense(a).as_array() @ d
            assert np.array_equal(to_dense(compose_cad(a, f)).as_array(), esperado)


def test_cad_identidade_e_tamanhos():
    a = sperm_at(3, 1234)
    assert compose_cad(a, CadFactors.identity(3)) == a
    with pytest.raises(SizeMismatch):
        compose_cad(a, CadFactors.identity(2))


def test_sorteio_reprodutivel():
    assert random_sperm(3, 42) == random_sperm(3, 42)
    rng = np.random.default_rng(0)
    assert len({random_sperm(3, rng) for _ in range(20)}) > 1


def test_sorteio_uniforme_em_n2():
    """
    16 000 sorteios em Σ_4: cada uma das 16 matrizes aparece 1000 ± 4σ vezes.
    """
    rng = np.random.default_rng(0)
    contagem = np.bincount([random_sperm(2, rng).rank for _ in range(16000)], minlength=16)
    sigma = np.sqrt(16000 * (1 / 16) * (15 / 16))
    assert len(contagem) == 16
    assert np.all(np.abs(contagem - 1000) <= 4 * sigma)


def test_ida_e_volta_densa_em_amostra_de_sigma_9():
    """
    validate_sperm(to_dense(a)) == a em 1000 matrizes sorteadas de Σ_9.
    """
    rng = np.random.default_rng(31)
    for _ in range(1000):
        a = random_sperm(3, rng)
        assert validate_sperm(to_dense(a)) == a
