""" Matrizes S-permutação na codificação por deslocamentos """
from dataclasses import dataclass
from itertools import islice, product
from math import factorial
from typing import Iterator, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import block_diag

from matrizes.bits import LIMITE_EXAUSTIVO, DenseBits
from matrizes.erros import DomainError, InvalidPermutation, NotSPermutation, SizeMismatch, TooLarge
from matrizes.permutacao import Perm, theta_inv

RNGLike = Union[int, np.random.Generator, None]


def _perms(seq, n, nome):
    perms = tuple(p if isinstance(p, Perm) else Perm(tuple(p)) for p in seq)
    if len(perms) != n:
        raise InvalidPermutation('{} deve ter {} permutações, recebeu {}'.format(nome, n, len(perms)))
    for p in perms:
        if p.n != n:
            raise InvalidPermutation('{} contém permutação de tamanho {} (esperado {})'.format(nome, p.n, n))
    return perms


def _rank_palavras(perms: Sequence[Perm]) -> int:
    base = factorial(perms[0].n)
    indice = 0
    for p in perms:
        indice = indice * base + p.index
    return indice


def _unrank_palavras(n: int, index: int) -> Tuple[Perm, ...]:
    base = factorial(n)
    todas = Perm.all(n)
    # dígitos na base n!, do menos significativo para o mais significativo
    digitos = []
    for _ in range(2 * n):
        index, d = divmod(index, base)
        digitos.append(d)
    return tuple(todas[d] for d in reversed(digitos))


@dataclass(frozen=True)
class SPermMatrix:
    """
    Matriz S-permutação n²×n² codificada por 2n permutações.

    row_off[k][l] é a linha (dentro do bloco) do único 1 do bloco (k, l);
    col_off[l][k] é a coluna (dentro do bloco) do mesmo 1. Uma linha global
    tem exatamente um 1 se e somente se cada row_off[k] é permutação, e
    dualmente para as colunas; índices começam em 0.
    """
    n: int
    row_off: Tuple[Perm, ...]
    col_off: Tuple[Perm, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError('n deve ser positivo')
        object.__setattr__(self, 'row_off', _perms(self.row_off, self.n, 'row_off'))
        object.__setattr__(self, 'col_off', _perms(self.col_off, self.n, 'col_off'))

    def cell(self, k: int, l: int) -> Tuple[int, int]:
        """Posição global (linha, coluna) do 1 do bloco (k, l)."""
        return k * self.n + self.row_off[k](l), l * self.n + self.col_off[l](k)

    def cells(self) -> Iterator[Tuple[int, int]]:
        for k in range(self.n):
            for l in range(self.n):
                yield self.cell(k, l)

    @property
    def rank(self) -> int:
        """Índice da matriz na ordem de enumerate_sigma."""
        return _rank_palavras(self.row_off + self.col_off)


@dataclass(frozen=True)
class CadFactors:
    """
    Fatores bloco-diagonais C e D de B = CAD, guardados pelas imagens θ(C_k) e θ(D_l).
    """
    c: Tuple[Perm, ...]
    d: Tuple[Perm, ...]

    def __post_init__(self):
        n = len(self.c)
        if n < 1:
            raise DomainError('Fatores vazios')
        object.__setattr__(self, 'c', _perms(self.c, n, 'c'))
        object.__setattr__(self, 'd', _perms(self.d, n, 'd'))

    @property
    def n(self) -> int:
        return len(self.c)

    @classmethod
    def identity(cls, n: int) -> 'CadFactors':
        return cls((Perm.identity(n),) * n, (Perm.identity(n),) * n)

    @property
    def rank(self) -> int:
        return _rank_palavras(self.c + self.d)


def sigma_size(n: int) -> int:
    return factorial(n) ** (2 * n)


def _guarda(n: int, allow_large: bool):
    if n < 1:
        raise DomainError('n deve ser positivo')
    if n > LIMITE_EXAUSTIVO and not allow_large:
        raise TooLarge('Enumeração de Σ com n = {} ({} matrizes) exige override explícito'.format(n, sigma_size(n)))


def sperm_at(n: int, index: int) -> SPermMatrix:
    """Matriz de posição `index` na ordem de enumeração."""
    if not 0 <= index < sigma_size(n):
        raise DomainError('Índice {} fora de [0, {})'.format(index, sigma_size(n)))
    palavras = _unrank_palavras(n, index)
    return SPermMatrix(n, palavras[:n], palavras[n:])


def factors_at(n: int, index: int) -> CadFactors:
    if not 0 <= index < sigma_size(n):
        raise DomainError('Índice {} fora de [0, {})'.format(index, sigma_size(n)))
    palavras = _unrank_palavras(n, index)
    return CadFactors(palavras[:n], palavras[n:])


def enumerate_sigma(n: int, start: int = 0, stop: Optional[int] = None,
                    allow_large: bool = False) -> Iterator[SPermMatrix]:
    """
    Percorre Σ_{n²} na ordem lexicográfica da concatenação
    (row_off[0], ..., row_off[n-1], col_off[0], ..., col_off[n-1]).

    Parâmetros:
    - n (int): parâmetro da grade.
    - start, stop (int): intervalo de índices [start, stop) para divisão em fatias.
    - allow_large (bool): libera n > LIMITE_EXAUSTIVO.

    Lança:
    - TooLarge: se n > LIMITE_EXAUSTIVO sem allow_large.
    """
    _guarda(n, allow_large)
    for palavras in islice(product(Perm.all(n), repeat=2 * n), start, stop):
        yield SPermMatrix(n, palavras[:n], palavras[n:])


def enumerate_factors(n: int, start: int = 0, stop: Optional[int] = None,
                      allow_large: bool = False) -> Iterator[CadFactors]:
    """Todas as tuplas de fatores (C, D), na mesma ordem de enumerate_sigma."""
    _guarda(n, allow_large)
    for palavras in islice(product(Perm.all(n), repeat=2 * n), start, stop):
        yield CadFactors(palavras[:n], palavras[n:])


def to_dense(a: SPermMatrix) -> DenseBits:
    lado = a.n * a.n
    bits = 0
    for linha, coluna in a.cells():
        bits |= 1 << (linha * lado + coluna)
    return DenseBits(a.n, bits)


def validate_sperm(d: DenseBits) -> SPermMatrix:
    """
    Confere as três famílias de restrições (linhas, colunas, blocos) e
    devolve a codificação por deslocamentos.

    Lança:
    - NotSPermutation: com a primeira restrição violada.
    """
    n, lado = d.n, d.side
    # linhas primeiro, depois colunas, por último os blocos
    for i in range(lado):
        total = d.row(i).bit_count()
        if total != 1:
            raise NotSPermutation('row', (i,), total)
    for j in range(lado):
        total = sum(d.get(i, j) for i in range(lado))
        if total != 1:
            raise NotSPermutation('column', (j,), total)

    # o único 1 do bloco (k, l) dá row_off[k](l) e col_off[l](k)
    row_off = [[0] * n for _ in range(n)]
    col_off = [[0] * n for _ in range(n)]
    for k in range(n):
        for l in range(n):
            uns = [(r, c) for r in range(n) for c in range(n) if d.get(k * n + r, l * n + c)]
            if len(uns) != 1:
                raise NotSPermutation('block', (k, l), len(uns))
            row_off[k][l], col_off[l][k] = uns[0]
    return SPermMatrix(n, row_off, col_off)


def compose_cad(a: SPermMatrix, f: CadFactors) -> SPermMatrix:
    """
    B = C·A·D calculado sobre os deslocamentos.

    Na linha de blocos k o produto C·A leva o 1 do deslocamento r para
    θ(C_k)⁻¹(r); na coluna de blocos l o produto A·D leva o deslocamento c
    para θ(D_l)(c).
    """
    if a.n != f.n:
        raise SizeMismatch('A tem n = {}, fatores têm n = {}'.format(a.n, f.n))
    # C age nas linhas de cada linha de blocos, D nas colunas de cada coluna de blocos
    row_off = tuple(c.inverse().compose(r) for c, r in zip(f.c, a.row_off))
    col_off = tuple(d.compose(c) for d, c in zip(f.d, a.col_off))
    return SPermMatrix(a.n, row_off, col_off)


def cad_dense_factors(f: CadFactors) -> Tuple[np.ndarray, np.ndarray]:
    """Matrizes bloco-diagonais C e D, n²×n², montadas a partir de theta_inv."""
    c = block_diag(*[np.array(theta_inv(p), dtype=np.int64) for p in f.c])
    d = block_diag(*[np.array(theta_inv(p), dtype=np.int64) for p in f.d])
    return c, d


def as_rng(seed: RNGLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_perm(n: int, rng: np.random.Generator) -> Perm:
    return Perm(tuple(int(x) for x in rng.permutation(n)))


def random_sperm(n: int, seed: RNGLike) -> SPermMatrix:
    """
    Matriz uniforme em Σ_{n²}: 2n permutações independentes e uniformes.

    Parâmetros:
    - n (int): parâmetro da grade.
    - seed (int ou np.random.Generator): semente ou gerador já em uso; o
      gerador é consumido, então chamadas seguidas produzem matrizes distintas.
    """
    if n < 1:
        raise DomainError('n deve ser positivo')
    rng = as_rng(seed)
    row_off = tuple(random_perm(n, rng) for _ in range(n))
    col_off = tuple(random_perm(n, rng) for _ in range(n))
    return SPermMatrix(n, row_off, col_off)


def random_factors(n: int, seed: RNGLike) -> CadFactors:
    rng = as_rng(seed)
    return CadFactors(tuple(random_perm(n, rng) for _ in range(n)), tuple(random_perm(n, rng) for _ in range(n)))


