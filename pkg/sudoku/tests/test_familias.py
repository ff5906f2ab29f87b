""" Testes de famílias disjuntas, montagem e decomposição de matrizes Sudoku """
import json

import pytest

from matrizes.erros import DomainError, IncompleteFamily, NotDisjoint, NotSudoku, ShapeError, SizeMismatch
from matrizes.spermutacao import sperm_at
from oraculo.oraculo import is_disjoint
from sudoku.busca import find_family
from sudoku.censo import complete_families_n2
from sudoku.familias import (DisjointFamily, SudokuMatrix, assemble, decompose, family_from_record,
                             family_to_record, is_sudoku)

SUDOKU_4 = [
    [1, 2, 3, 4],
    [3, 4, 1, 2],
    [2, 1, 4, 3],
    [4, 3, 2, 1],
]

# quadrado latino que viola o bloco superior esquerdo
LATINO_4 = [
    [1, 2, 3, 4],
    [2, 3, 4, 1],
    [3, 4, 1, 2],
    [4, 1, 2, 3],
]


@pytest.fixture
def familia_4():
    return decompose(SUDOKU_4)


def test_decomposicao_e_montagem(familia_4):
    """
    Cada valor vira uma matriz S-permutação e a soma ponderada recompõe a tabela.
    """
    assert familia_4.k == 4
    for i in range(4):
        for j in range(i + 1, 4):
            assert is_disjoint(familia_4.members[i], familia_4.members[j])
    m = assemble(familia_4)
    assert [list(linha) for linha in m.cells] == SUDOKU_4
    assert decompose(m) == familia_4
    assert assemble(list(familia_4.members)) == m


def test_n1():
    m = assemble([sperm_at(1, 0)])
    assert m.cells == ((1,),)
    assert is_sudoku([[1]])
    assert decompose([[1]]).members == (sperm_at(1, 0),)


def test_tabela_que_nao_e_sudoku():
    assert not is_sudoku(LATINO_4)
    repetido = [list(linha) for linha in SUDOKU_4]
    repetido[0][0] = 2
    assert not is_sudoku(repetido)
    with pytest.raises(NotSudoku):
        decompose(LATINO_4)
    with pytest.raises(NotSudoku):
        SudokuMatrix(2, LATINO_4)


@pytest.mark.parametrize('tabela', [
    [[1, 2, 3]],
    [[1, 2, 3], [2, 3, 1], [3, 1, 2]],
    [[1.0, 2.0, 3.0, 4.0]] * 4,
])
def test_formato_invalido(tabela):
    with pytest.raises(ShapeError):
        is_sudoku(tabela)


def test_familia_incompleta(familia_4):
    with pytest.raises(IncompleteFamily):
        assemble(DisjointFamily(2, familia_4.members[:2]))
    with pytest.raises(IncompleteFamily):
        assemble([])


def test_familia_nao_disjunta(familia_4):
    membros = (familia_4.members[0], familia_4.members[1], familia_4.members[1], familia_4.members[3])
    with pytest.raises(NotDisjoint) as erro:
        assemble(membros)
    assert erro.value.pair == (1, 2)


def test_familia_invalida():
    with pytest.raises(SizeMismatch):
        DisjointFamily(2, (sperm_at(3, 0),))
    with pytest.raises(DomainError):
        DisjointFamily(1, (sperm_at(1, 0), sperm_at(1, 0)))


def test_chave_canonica_ignora_ordem(familia_4):
    invertida = DisjointFamily(2, tuple(reversed(familia_4.members)))
    assert invertida != familia_4
    assert invertida.canonical_key() == familia_4.canonical_key()


def test_registro_da_familia(familia_4, tmp_path):
    caminho = tmp_path / 'familia.json'
    caminho.write_text(json.dumps(family_to_record(familia_4)))
    assert family_from_record(json.loads(caminho.read_text())) == familia_4
    registro = family_to_record(familia_4)
    registro['k'] = 3
    with pytest.raises(ShapeError):
        family_from_record(registro)


def test_texto_do_sudoku(familia_4):
    assert assemble(familia_4).to_text() == '1 2 3 4\n3 4 1 2\n2 1 4 3\n4 3 2 1'


def test_todas_as_familias_de_n2_ida_e_volta():
    """
    As 12 famílias completas de Σ_4 montam tabelas Sudoku distintas que se
    decompõem de volta na mesma família.
    """
    familias = complete_families_n2()
    assert len(familias) == 12
    tabelas = set()
    for familia in familias:
        m = assemble(familia)
        assert is_sudoku(m.cells)
        assert decompose(m) == familia
        tabelas.add(m.cells)
    assert len(tabelas) == 12


@pytest.mark.parametrize('semente', [0, 1, 2])
def test_familia_de_n3_ida_e_volta(semente):
    familia = find_family(3, 9, seed=semente, budget=10 ** 6, compatible_pool=True)
    m = assemble(familia)
    assert is_sudoku(m.cells)
    assert decompose(m) == familia
