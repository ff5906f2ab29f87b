""" Censo exaustivo para n = 2 """
import logging
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, Iterator, List, Tuple

from matrizes.erros import TooLarge
from matrizes.spermutacao import SPermMatrix, enumerate_sigma
from oraculo.oraculo import is_disjoint
from sudoku.familias import DisjointFamily


@dataclass(frozen=True)
class CensusResult:
    """
    Atributos:
    - families: famílias completas não ordenadas, μ(2, 2).
    - sudoku_count: rotulações ordenadas, 4!·families.
    - disjoint_pairs: subconjuntos disjuntos de 2 elementos (η_2).
    - by_size: subconjuntos mutuamente disjuntos por tamanho k.
    - direct_tables: tabelas Sudoku 4×4 contadas diretamente, sem usar Σ.
    """
    families: int
    sudoku_count: int
    disjoint_pairs: int
    direct_tables: int
    by_size: Dict[int, int] = field(default_factory=dict)


def _subconjuntos_disjuntos(matrizes: List[SPermMatrix]) -> Iterator[Tuple[int, ...]]:
    """Índices de todos os subconjuntos não vazios mutuamente disjuntos, em ordem crescente."""
    total = len(matrizes)
    vizinhos = [{j for j in range(total) if j != i and is_disjoint(matrizes[i], matrizes[j])}
                for i in range(total)]

    def _estender(subconjunto, candidatos):
        yield subconjunto
        # só índices maiores que o último membro, para gerar cada subconjunto uma vez
        for j in sorted(candidatos):
            yield from _estender(subconjunto + (j,), {x for x in candidatos & vizinhos[j] if x > j})

    for i in range(total):
        yield from _estender((i,), {j for j in vizinhos[i] if j > i})


def complete_families_n2() -> List[DisjointFamily]:
    """As famílias completas de Σ_4 (μ(2, 2) = 12), membros em ordem de enumeração."""
    matrizes = list(enumerate_sigma(2))
    return [DisjointFamily(2, tuple(matrizes[i] for i in s))
            for s in _subconjuntos_disjuntos(matrizes) if len(s) == 4]


def census_n2() -> CensusResult:
    n = 2
    matrizes = list(enumerate_sigma(n))
    por_tamanho = {k: 0 for k in range(1, n * n + 1)}
    for subconjunto in _subconjuntos_disjuntos(matrizes):
        por_tamanho[len(subconjunto)] += 1

    # famílias completas têm n² membros; cada uma admite (n²)! rotulações
    familias = por_tamanho[n * n]
    resultado = CensusResult(families=familias, sudoku_count=factorial(n * n) * familias,
                             disjoint_pairs=por_tamanho[2], direct_tables=count_sudoku_tables(n),
                             by_size=por_tamanho)
    logging.info('Censo n = 2: {} famílias, {} matrizes Sudoku, {} pares disjuntos'.format(
        resultado.families, resultado.sudoku_count, resultado.disjoint_pairs))
    return resultado


def count_sudoku_tables(n: int) -> int:
    """Conta tabelas Sudoku n²×n² por retrocesso célula a célula (n ≤ 2)."""
    if n > 2:
        raise TooLarge('Contagem direta de tabelas Sudoku recusada para n = {}'.format(n))
    lado = n * n
    linhas = [set() for _ in range(lado)]
    colunas = [set() for _ in range(lado)]
    blocos = [set() for _ in range(lado)]

    def _preencher(pos):
        if pos == lado * lado:
            return 1
        i, j = divmod(pos, lado)
        # bloco da célula (i, j)
        b = (i // n) * n + j // n
        total = 0
        for v in range(1, lado + 1):
            if v in linhas[i] or v in colunas[j] or v in blocos[b]:
                continue
            linhas[i].add(v)
            colunas[j].add(v)
            blocos[b].add(v)
            total += _preencher(pos + 1)
            linhas[i].discard(v)
            colunas[j].discard(v)
            blocos[b].discard(v)
        return total

    return _preencher(0)
