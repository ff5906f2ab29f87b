""" Oráculo exaustivo: disjunção, ξ, η, R, classificação dos fatores CAD e bijeção """
import logging
import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from contagem.formulas import basic_case_count, sigma_cardinality
from matrizes.bits import LIMITE_EXAUSTIVO, DenseBits, dense_table, disjoint_mask
from matrizes.erros import DomainError, InvarianceViolated, SizeMismatch, TooLarge
from matrizes.spermutacao import CadFactors, SPermMatrix, compose_cad, enumerate_factors, to_dense
from oraculo.paralelo import run_sharded, shard_ranges


def is_disjoint(a: SPermMatrix, b: SPermMatrix) -> bool:
    """
    Verdadeiro se nenhuma célula tem 1 nas duas matrizes, comparando os
    deslocamentos bloco a bloco.
    """
    if a.n != b.n:
        raise SizeMismatch('Matrizes com n = {} e n = {}'.format(a.n, b.n))
    for k in range(a.n):
        for l in range(a.n):
            if a.row_off[k](l) == b.row_off[k](l) and a.col_off[l](k) == b.col_off[l](k):
                return False
    return True


def is_disjoint_dense(a: DenseBits, b: DenseBits) -> bool:
    if a.n != b.n:
        raise SizeMismatch('Imagens com n = {} e n = {}'.format(a.n, b.n))
    return bool(np.all((a.words() & b.words()) == 0))


@dataclass(frozen=True, order=True)
class PatternClass:
    """
    Padrão de desarranjos de uma tupla de fatores: o bit k de c_pattern vale 1
    se θ(C_k) é desarranjo, idem para d_pattern e θ(D_l).
    """
    c_pattern: Tuple[int, ...]
    d_pattern: Tuple[int, ...]

    @classmethod
    def of(cls, f: CadFactors) -> 'PatternClass':
        return cls(tuple(int(p.is_derangement()) for p in f.c), tuple(int(p.is_derangement()) for p in f.d))

    @property
    def is_basic(self) -> bool:
        return all(self.c_pattern) or all(self.d_pattern)

    def __str__(self):
        return 'c={} d={}'.format(''.join(map(str, self.c_pattern)), ''.join(map(str, self.d_pattern)))


@dataclass(frozen=True)
class ClassTally:
    pattern: PatternClass
    total_pairs: int
    disjoint_pairs: int


@dataclass(frozen=True)
class ClassificationSummary:
    total_pairs: int
    basic_pairs: int
    basic_disjoint: int
    residual: int

    @property
    def basic_all_disjoint(self) -> bool:
        return self.basic_pairs == self.basic_disjoint

    @property
    def xi(self) -> int:
        return self.basic_disjoint + self.residual


@dataclass(frozen=True)
class InvarianceResult:
    constant: bool
    value: int
    distinct: Tuple[int, ...]


# Rótulos i–viii da análise manual para n = 3, indexados por
# (quantidade de θ(C_k) não desarranjos, quantidade de θ(D_l) não desarranjos)
_CASOS_N3 = {(1, 1): 'i', (2, 2): 'ii', (2, 1): 'iii', (1, 2): 'iv',
             (3, 1): 'v', (1, 3): 'vi', (2, 3): 'vii', (3, 2): 'viii'}


def paper_case_label(pattern: PatternClass) -> Optional[str]:
    """
    Rótulo da análise manual de n = 3 para uma classe não básica; None para
    as classes básicas, para n ≠ 3 e para a classe sem nenhum desarranjo,
    que a análise manual não lista.
    """
    if len(pattern.c_pattern) != 3 or pattern.is_basic:
        return None
    chave = (pattern.c_pattern.count(0), pattern.d_pattern.count(0))
    return _CASOS_N3.get(chave)


def summarize_classification(tallies: List[ClassTally]) -> ClassificationSummary:
    total = sum(t.total_pairs for t in tallies)
    basicas = [t for t in tallies if t.pattern.is_basic]
    return ClassificationSummary(total_pairs=total,
                                 basic_pairs=sum(t.total_pairs for t in basicas),
                                 basic_disjoint=sum(t.disjoint_pairs for t in basicas),
                                 residual=sum(t.disjoint_pairs for t in tallies if not t.pattern.is_basic))


def _contar_fatia(tarefa):
    n, inicio, fim = tarefa
    tabela = dense_table(n)
    # em processo filho a tabela é reconstruída uma vez e fica no cache
    contagens = np.empty(fim - inicio, dtype=np.int64)
    for i in range(inicio, fim):
        contagens[i - inicio] = np.count_nonzero(disjoint_mask(tabela, tabela[i]))
    return contagens


def _classificar_fatia(tarefa):
    a, inicio, fim = tarefa
    contagens = {}
    for f in enumerate_factors(a.n, inicio, fim):
        # [pares, disjuntos] por padrão
        par = contagens.setdefault(PatternClass.of(f), [0, 0])
        par[0] += 1
        if is_disjoint(a, compose_cad(a, f)):
            par[1] += 1
    return contagens


def _imagens_fatia(tarefa):
    a, inicio, fim = tarefa
    return [compose_cad(a, f).rank for f in enumerate_factors(a.n, inicio, fim)]


class ExhaustiveOracle:
    """
    Verdade de referência por enumeração completa de Σ_{n²}, n ≤ 3.

    O trabalho é dividido em fatias contíguas de índices e reduzido por soma
    inteira na ordem das fatias, então o resultado é o mesmo para qualquer
    número de processos.
    """

    def __init__(self, n: int, workers: Optional[int] = None, shards_per_worker: int = 4):
        """
        Parâmetros:
        - n (int): parâmetro da grade.
        - workers (int): processos; padrão vem de SPERM_WORKERS ou 1.
        - shards_per_worker (int): fatias por processo.
        """
        if n < 1:
            raise DomainError('n deve ser positivo')
        if n > LIMITE_EXAUSTIVO:
            raise TooLarge('Oráculo exaustivo recusado para n = {}; use o modo de amostragem'.format(n))
        self.n = n
        if workers is None:
            workers = int(os.getenv('SPERM_WORKERS') or 1)
        if workers < 1:
            raise DomainError('workers deve ser pelo menos 1')
        self.workers = workers
        self.shards_per_worker = shards_per_worker
        self._contagens = None

    @property
    def total(self) -> int:
        return sigma_cardinality(self.n)

    def _fatias(self):
        return shard_ranges(self.total, self.workers * self.shards_per_worker)

    def _confere(self, a: SPermMatrix):
        if a.n != self.n:
            raise SizeMismatch('Oráculo com n = {}, matriz com n = {}'.format(self.n, a.n))

    def xi_exact(self, a: SPermMatrix) -> int:
        """Quantidade de B ∈ Σ disjuntas de A."""
        self._confere(a)
        tabela = dense_table(self.n)
        return int(np.count_nonzero(disjoint_mask(tabela, to_dense(a).words())))

    def disjoint_counts(self) -> np.ndarray:
        """ξ(A) para cada A de Σ, na ordem de enumeração (calculado uma vez)."""
        if self._contagens is None:
            logging.info('Varredura de pares para n = {} ({} matrizes)'.format(self.n, self.total))
            tarefas = [(self.n, inicio, fim) for inicio, fim in self._fatias()]
            partes = run_sharded(_contar_fatia, tarefas, self.workers)
            self._contagens = np.concatenate(partes)
            logging.info('Varredura concluída: {} testes de pares'.format(self.total * self.total))
        return self._contagens

    def xi_invariance_check(self) -> InvarianceResult:
        contagens = self.disjoint_counts()
        distintos = tuple(int(x) for x in np.unique(contagens))
        return InvarianceResult(constant=len(distintos) == 1, value=int(contagens[0]), distinct=distintos)

    def eta_exact(self) -> int:
        """Pares não ordenados disjuntos: metade da soma de ξ(A) sobre Σ."""
        soma = int(self.disjoint_counts().sum())
        if soma % 2:
            raise InvarianceViolated('Soma de pares ordenados ímpar ({}): relação não simétrica'.format(soma))
        return soma // 2

    def residual_exact(self) -> int:
        """
        R_n = ξ_n - basic_case_count(n), sempre ≥ 0.

        Lança:
        - InvarianceViolated: se ξ(A) depender de A ou ficar abaixo do caso básico.
        """
        resultado = self.xi_invariance_check()
        if not resultado.constant:
            logging.error('ξ não é constante para n = {}: {}'.format(self.n, resultado.distinct))
            raise InvarianceViolated('ξ assume os valores {}'.format(resultado.distinct))
        residuo = resultado.value - basic_case_count(self.n)
        if residuo < 0:
            logging.error('Resíduo negativo para n = {}: {}'.format(self.n, residuo))
            raise InvarianceViolated('ξ = {} abaixo do caso básico {}'.format(
                resultado.value, basic_case_count(self.n)))
        return residuo

    def cad_classify(self, a: SPermMatrix) -> List[ClassTally]:
        """
        Percorre todas as tuplas de fatores, calcula B = CAD e totaliza por
        padrão de desarranjos. Classes ordenadas por (c_pattern, d_pattern).
        """
        self._confere(a)
        tarefas = [(a, inicio, fim) for inicio, fim in self._fatias()]
        total: Dict[PatternClass, List[int]] = {}
        for parte in run_sharded(_classificar_fatia, tarefas, self.workers):
            for padrao, (pares, disjuntos) in parte.items():
                acumulado = total.setdefault(padrao, [0, 0])
                acumulado[0] += pares
                acumulado[1] += disjuntos
        return [ClassTally(p, pares, disjuntos) for p, (pares, disjuntos) in sorted(total.items())]

    def cad_bijection_check(self, a: SPermMatrix) -> bool:
        """Verdadeiro se f ↦ CAD atinge (n!)^{2n} matrizes distintas."""
        self._confere(a)
        tarefas = [(a, inicio, fim) for inicio, fim in self._fatias()]
        imagens = set()
        for parte in run_sharded(_imagens_fatia, tarefas, self.workers):
            imagens.update(parte)
        return len(imagens) == self.total
