""" Famílias de matrizes S-permutação mutuamente disjuntas e matrizes Sudoku """
from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import Any, Dict, Sequence, Tuple, Union

import numpy as np

from matrizes.bits import DenseBits
from matrizes.erros import DomainError, IncompleteFamily, NotDisjoint, NotSudoku, ShapeError, SizeMismatch
from matrizes.formato import FORMAT_VERSION, matrix_from_record, matrix_to_record
from matrizes.spermutacao import SPermMatrix, validate_sperm
from oraculo.oraculo import is_disjoint


@dataclass(frozen=True)
class DisjointFamily:
    """
    Sequência ordenada de k matrizes de Σ_{n²}, duas a duas disjuntas.

    Lança (na construção):
    - DomainError: k fora de [1, n²].
    - SizeMismatch: membro com outro n.
    - NotDisjoint: com os índices do primeiro par que compartilha uma célula.
    """
    n: int
    members: Tuple[SPermMatrix, ...]

    def __post_init__(self):
        membros = tuple(self.members)
        object.__setattr__(self, 'members', membros)
        if not 1 <= len(membros) <= self.n * self.n:
            raise DomainError('Família com {} membros para n = {}'.format(len(membros), self.n))
        for membro in membros:
            if membro.n != self.n:
                raise SizeMismatch('Membro com n = {} em família com n = {}'.format(membro.n, self.n))
        for i, j in combinations(range(len(membros)), 2):
            if not is_disjoint(membros[i], membros[j]):
                raise NotDisjoint((i, j))

    @property
    def k(self) -> int:
        return len(self.members)

    def canonical_key(self) -> Tuple[int, ...]:
        """Chave independente da ordem: índices de enumeração ordenados."""
        return tuple(sorted(m.rank for m in self.members))


def is_sudoku(table) -> bool:
    """
    Verdadeiro se toda linha, coluna e bloco da tabela n²×n² é uma
    permutação de [1, n²].

    Lança:
    - ShapeError: tabela não quadrada, lado que não é quadrado perfeito ou valores não inteiros.
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ShapeError('Tabela com formato {}'.format(arr.shape))
    lado = arr.shape[0]
    n = isqrt(lado)
    if n * n != lado:
        raise ShapeError('Lado {} não é quadrado perfeito'.format(lado))
    if not np.issubdtype(arr.dtype, np.integer):
        raise ShapeError('Tabela com valores do tipo {}'.format(arr.dtype))

    # cada bloco n×n vira uma linha, para ordenar linhas, colunas e blocos do mesmo jeito
    alvo = np.arange(1, lado + 1)
    blocos = arr.reshape(n, n, n, n).transpose(0, 2, 1, 3).reshape(lado, lado)
    return all((np.sort(grupo, axis=1) == alvo).all() for grupo in (arr, arr.T, blocos))


@dataclass(frozen=True)
class SudokuMatrix:
    n: int
    cells: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        celulas = tuple(tuple(int(x) for x in linha) for linha in self.cells)
        object.__setattr__(self, 'cells', celulas)
        if len(celulas) != self.n * self.n:
            raise ShapeError('Tabela {}×? para n = {}'.format(len(celulas), self.n))
        if not is_sudoku(celulas):
            raise NotSudoku('A tabela não é uma matriz Sudoku')

    def as_array(self) -> np.ndarray:
        return np.array(self.cells, dtype=np.int64)

    def to_text(self) -> str:
        """n² linhas de n² inteiros separados por espaço."""
        return '\n'.join(' '.join(str(x) for x in linha) for linha in self.cells)


def assemble(family: Union[DisjointFamily, Sequence[SPermMatrix]]) -> SudokuMatrix:
    """
    M = 1·A_1 + 2·A_2 + ... + n²·A_{n²}.

    Parâmetros:
    - family: família completa, ou a sequência de membros na ordem dos valores.

    Lança:
    - IncompleteFamily: menos de n² membros.
    - NotDisjoint: membros que compartilham uma célula.
    """
    if not isinstance(family, DisjointFamily):
        membros = tuple(family)
        if not membros:
            raise IncompleteFamily('Família vazia')
        family = DisjointFamily(membros[0].n, membros)
    n = family.n
    if family.k != n * n:
        raise IncompleteFamily('Família com {} de {} membros'.format(family.k, n * n))

    # o membro de posição v - 1 recebe o valor v
    celulas = np.zeros((n * n, n * n), dtype=np.int64)
    for valor, membro in enumerate(family.members, start=1):
        for i, j in membro.cells():
            celulas[i, j] = valor
    return SudokuMatrix(n, celulas.tolist())


def decompose(m: Union[SudokuMatrix, Sequence[Sequence[int]]]) -> DisjointFamily:
    """
    O membro A_v é o indicador das células iguais a v.

    Lança:
    - NotSudoku: se a tabela não for uma matriz Sudoku.
    """
    if not isinstance(m, SudokuMatrix):
        if not is_sudoku(m):
            raise NotSudoku('A tabela não é uma matriz Sudoku')
        arr = np.asarray(m)
        m = SudokuMatrix(isqrt(arr.shape[0]), arr.tolist())
    arr = m.as_array()
    # validate_sperm confere cada indicador e recupera os deslocamentos
    membros = tuple(validate_sperm(DenseBits.from_rows((arr == v).astype(int).tolist()))
                    for v in range(1, m.n * m.n + 1))
    return DisjointFamily(m.n, membros)


def family_to_record(family: DisjointFamily) -> Dict[str, Any]:
    return {'format_version': FORMAT_VERSION, 'n': family.n, 'k': family.k,
            'members': [matrix_to_record(a) for a in family.members]}


def family_from_record(record: Dict[str, Any]) -> DisjointFamily:
    membros = tuple(matrix_from_record(r) for r in record['members'])
    if len(membros) != int(record['k']):
        raise ShapeError('k = {} mas {} membros no registro'.format(record['k'], len(membros)))
    return DisjointFamily(int(record['n']), membros)
