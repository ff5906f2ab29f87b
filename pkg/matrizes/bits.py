""" Imagem densa empacotada em bits e tabela de imagens de Σ """
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, isqrt
from typing import Sequence, Tuple

import numpy as np

from matrizes.erros import ShapeError, TooLarge
from matrizes.permutacao import Perm

# Maior n para o qual se enumera Σ inteiro; (4!)^8 ≈ 1,1·10^11 matrizes já não cabe
LIMITE_EXAUSTIVO = 3

BITS_POR_PALAVRA = 64


def word_count(n: int) -> int:
    """Quantidade de palavras de 64 bits necessária para n⁴ bits."""
    return max(1, -(-n ** 4 // BITS_POR_PALAVRA))


@dataclass(frozen=True)
class DenseBits:
    """
    Imagem densa n²×n² de uma matriz binária, linha a linha: a célula (i, j)
    ocupa o bit i·n² + j do inteiro `bits`.
    """
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError('n deve ser positivo')
        if self.bits < 0 or self.bits >> (self.n ** 4):
            raise ShapeError('A imagem tem mais de {} bits'.format(self.n ** 4))

    @property
    def side(self) -> int:
        return self.n * self.n

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> 'DenseBits':
        lado = len(rows)
        n = isqrt(lado)
        if n * n != lado or any(len(linha) != lado for linha in rows):
            raise ShapeError('Tabela {}×? não é n²×n²'.format(lado))
        bits = 0
        for i, linha in enumerate(rows):
            for j, valor in enumerate(linha):
                if valor:
                    bits |= 1 << (i * lado + j)
        return cls(n, bits)

    def get(self, i: int, j: int) -> int:
        return (self.bits >> (i * self.side + j)) & 1

    def popcount(self) -> int:
        return self.bits.bit_count()

    def row(self, i: int) -> int:
        """Bits da linha i como inteiro de n² bits."""
        return (self.bits >> (i * self.side)) & ((1 << self.side) - 1)

    def as_rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(self.get(i, j) for j in range(self.side)) for i in range(self.side))

    def as_array(self) -> np.ndarray:
        return np.array(self.as_rows(), dtype=np.int64)

    def words(self) -> np.ndarray:
        """Os n⁴ bits em palavras uint64, a menos significativa primeiro."""
        mascara = (1 << BITS_POR_PALAVRA) - 1
        return np.array([(self.bits >> (BITS_POR_PALAVRA * w)) & mascara for w in range(word_count(self.n))],
                        dtype=np.uint64)

    def is_disjoint_with(self, other: 'DenseBits') -> bool:
        return self.bits & other.bits == 0

    def to_text(self) -> str:
        """n² linhas de n² caracteres '0'/'1'."""
        return '\n'.join(''.join(str(x) for x in linha) for linha in self.as_rows())


def _digitos(n: int, indices: np.ndarray) -> np.ndarray:
    """Dígitos na base n! de cada índice, o mais significativo primeiro (2n dígitos)."""
    base = factorial(n)
    digitos = np.empty((2 * n, len(indices)), dtype=np.int64)
    resto = indices.copy()
    for t in range(2 * n - 1, -1, -1):
        digitos[t] = resto % base
        resto //= base
    return digitos


@lru_cache(maxsize=None)
def dense_table(n: int) -> np.ndarray:
    """
    Imagens densas de todas as matrizes de Σ_{n²}, na ordem de enumeração.

    Parâmetros:
    - n (int): parâmetro da grade, 1 ≤ n ≤ 3.

    Retorno:
    - np.ndarray: matriz (N, W) de uint64 somente leitura, N = (n!)^{2n},
      W = word_count(n), em ordem Fortran para que cada palavra seja contígua.

    Lança:
    - TooLarge: se n > LIMITE_EXAUSTIVO.
    """
    if n < 1:
        raise ShapeError('n deve ser positivo')
    if n > LIMITE_EXAUSTIVO:
        raise TooLarge('Tabela densa de Σ recusada para n = {}'.format(n))

    # digitos[t, i]: índice da t-ésima permutação de deslocamento da matriz i
    perms = np.array([p.images for p in Perm.all(n)], dtype=np.int64)
    total = factorial(n) ** (2 * n)
    digitos = _digitos(n, np.arange(total, dtype=np.int64))
    lado = n * n
    tabela = np.zeros((total, word_count(n)), dtype=np.uint64, order='F')
    um = np.uint64(1)

    # um bit por bloco (k, l), vetorizado sobre todas as matrizes
    for k in range(n):
        for l in range(n):
            linha = k * n + perms[digitos[k], l]
            coluna = l * n + perms[digitos[n + l], k]
            bit = linha * lado + coluna
            palavra = bit // BITS_POR_PALAVRA
            # cada matriz pode cair em palavras diferentes; uma passada por palavra
            deslocamento = (bit % BITS_POR_PALAVRA).astype(np.uint64)
            for w in range(tabela.shape[1]):
                sel = palavra == w
                tabela[sel, w] |= um << deslocamento[sel]

    tabela.setflags(write=False)
    logging.info('Tabela densa de Σ para n = {}: {} imagens em {} palavras'.format(n, total, tabela.shape[1]))
    return tabela


def disjoint_mask(table: np.ndarray, words: np.ndarray) -> np.ndarray:
    """
    Núcleo de disjunção: máscara booleana das linhas da tabela cujo AND com
    `words` é zero em todas as palavras.
    """
    mascara = (table[:, 0] & words[0]) == 0
    for w in range(1, table.shape[1]):
        mascara &= (table[:, w] & words[w]) == 0
    return mascara
