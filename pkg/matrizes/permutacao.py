""" Permutações e o isomorfismo theta entre matrizes de permutação e permutações """
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, Sequence, Tuple

from matrizes.erros import InvalidPermutation, NotPermutationMatrix


@dataclass(frozen=True, order=True)
class Perm:
    """
    Permutação de [0, n) em notação de uma linha: a posição i guarda a imagem de i.

    A ordenação da dataclass é a lexicográfica das imagens, a mesma usada na
    enumeração de Σ.
    """
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation('Não é uma permutação de [0, {}): {}'.format(len(images), list(images)))
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n: int) -> 'Perm':
        return cls(tuple(range(n)))

    @classmethod
    def all(cls, n: int) -> Tuple['Perm', ...]:
        """Todas as permutações de [0, n) em ordem lexicográfica."""
        return _todas(n)

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def index(self) -> int:
        """Posição da permutação em Perm.all(n)."""
        return _indices(self.n)[self]

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> 'Perm':
        inversa = [0] * self.n
        for i, j in enumerate(self.images):
            inversa[j] = i
        return Perm(tuple(inversa))

    def compose(self, other: 'Perm') -> 'Perm':
        """(self ∘ other)(i) = self(other(i))."""
        if other.n != self.n:
            raise InvalidPermutation('Composição entre permutações de tamanhos {} e {}'.format(self.n, other.n))
        return Perm(tuple(self.images[j] for j in other.images))

    def fixed_points(self) -> Tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.images) if i == j)

    def is_derangement(self) -> bool:
        return all(i != j for i, j in enumerate(self.images))


@lru_cache(maxsize=None)
def _todas(n: int) -> Tuple[Perm, ...]:
    # itertools.permutations sobre range(n) já produz a ordem lexicográfica
    return tuple(Perm(p) for p in permutations(range(n)))


@lru_cache(maxsize=None)
def _indices(n: int) -> Dict[Perm, int]:
    return {p: i for i, p in enumerate(_todas(n))}


def theta(matrix_rows: Sequence[Sequence[int]]) -> Perm:
    """
    Converte uma matriz de permutação n×n na permutação ρ com ρ(i) = j
    exatamente quando a entrada (i, j) vale 1.

    Parâmetros:
    - matrix_rows (sequência de linhas 0/1): a matriz de permutação.

    Retorno:
    - Perm: a imagem θ(M).

    Lança:
    - NotPermutationMatrix: se alguma linha ou coluna não tiver exatamente um 1.
    """
    linhas = [tuple(int(x) for x in linha) for linha in matrix_rows]
    n = len(linhas)
    if any(len(linha) != n for linha in linhas):
        raise NotPermutationMatrix('A matriz não é quadrada')
    if any(x not in (0, 1) for linha in linhas for x in linha):
        raise NotPermutationMatrix('A matriz não é binária')

    imagens = []
    for i, linha in enumerate(linhas):
        if sum(linha) != 1:
            raise NotPermutationMatrix('Linha {} tem {} uns'.format(i, sum(linha)))
        imagens.append(linha.index(1))
    for j in range(n):
        total = sum(linha[j] for linha in linhas)
        if total != 1:
            raise NotPermutationMatrix('Coluna {} tem {} uns'.format(j, total))
    return Perm(tuple(imagens))


def theta_inv(p: Perm) -> Tuple[Tuple[int, ...], ...]:
    """Matriz de permutação n×n de ρ: a entrada (i, ρ(i)) vale 1."""
    return tuple(tuple(1 if j == p(i) else 0 for j in range(p.n)) for i in range(p.n))
