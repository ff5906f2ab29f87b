""" Busca aleatória de famílias disjuntas e experimento de taxa """
import logging
import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from matrizes.bits import LIMITE_EXAUSTIVO, dense_table, disjoint_mask
from matrizes.erros import DomainError, Exhausted
from matrizes.spermutacao import RNGLike, as_rng, random_sperm, sperm_at
from oraculo.oraculo import is_disjoint
from oraculo.paralelo import run_sharded
from sudoku.familias import DisjointFamily, assemble

ORCAMENTO_PADRAO = 1000000
TRAVAMENTO_PADRAO = 64


@dataclass(frozen=True)
class SearchResult:
    family: DisjointFamily
    draws: int
    backtracks: int


class FamilySearch:
    """
    Cresce uma família sorteando candidatos uniformes com random_sperm e
    aceitando os que são disjuntos de todos os membros. Cada candidato
    sorteado conta um sorteio do orçamento; `stall` rejeições seguidas
    descartam o membro mais recente.

    Com compatible_pool (só para n ≤ LIMITE_EXAUSTIVO) o sorteio é feito
    direto entre as matrizes ainda compatíveis: todo sorteio aceita um
    membro, e um nível que já tentou `stall` filhos sem completar a família
    é abandonado.
    """

    def __init__(self, n: int, k: Optional[int] = None, budget: Optional[int] = None,
                 stall: Optional[int] = None, compatible_pool: bool = False):
        """
        Parâmetros:
        - n (int): parâmetro da grade.
        - k (int): tamanho da família, 2 ≤ k ≤ n². Default: n².
        - budget (int): limite de sorteios. Default: SPERM_BUDGET ou 1 000 000.
        - stall (int): limite de travamento. Default: SPERM_STALL ou 64.
        - compatible_pool (bool): sorteia entre as matrizes compatíveis.

        Lança:
        - DomainError: k, budget ou stall fora do domínio, ou compatible_pool com n grande.
        """
        self.n = n
        self.k = k if k is not None else n * n
        if not 2 <= self.k <= n * n:
            raise DomainError('k = {} fora de [2, {}]'.format(self.k, n * n))
        self.budget = budget if budget is not None else int(os.getenv('SPERM_BUDGET') or ORCAMENTO_PADRAO)
        self.stall = stall if stall is not None else int(os.getenv('SPERM_STALL') or TRAVAMENTO_PADRAO)
        if self.budget < 1 or self.stall < 1:
            raise DomainError('budget e stall devem ser positivos')
        if compatible_pool and n > LIMITE_EXAUSTIVO:
            raise DomainError('Sorteio entre compatíveis exige n ≤ {}'.format(LIMITE_EXAUSTIVO))
        self.compatible_pool = compatible_pool

    def run(self, seed: RNGLike) -> SearchResult:
        """
        Executa a busca; a mesma semente produz a mesma família ou o mesmo Exhausted.

        Lança:
        - Exhausted: orçamento esgotado ou espaço de busca vazio.
        """
        rng = as_rng(seed)
        try:
            if self.compatible_pool:
                resultado = self._entre_compativeis(rng)
            else:
                resultado = self._por_rejeicao(rng)
        except Exhausted as e:
            logging.info('Busca n = {}, k = {} esgotada: {}'.format(self.n, self.k, e))
            raise
        logging.info('Família n = {}, k = {} encontrada com {} sorteios e {} retrocessos'.format(
            self.n, self.k, resultado.draws, resultado.backtracks))
        return resultado

    def _entre_compativeis(self, rng) -> SearchResult:
        tabela = dense_table(self.n)
        membros = []
        # uma pilha por nível: matrizes compatíveis, filhos já descartados e filhos tentados
        compativeis = [np.ones(len(tabela), dtype=bool)]
        tabus = [[]]
        tentativas = [0]
        sorteios = retrocessos = 0

        while len(membros) < self.k:
            candidatos = np.flatnonzero(compativeis[-1])
            if tabus[-1]:
                candidatos = candidatos[~np.isin(candidatos, tabus[-1])]

            # nível sem saída ou travado: volta um nível e marca o membro removido
            travado = bool(membros) and tentativas[-1] >= self.stall
            if len(candidatos) == 0 or travado:
                if not membros:
                    raise Exhausted(sorteios, retrocessos)
                removido = membros.pop()
                compativeis.pop()
                tabus.pop()
                tentativas.pop()
                tabus[-1].append(removido)
                retrocessos += 1
                continue
            if sorteios >= self.budget:
                raise Exhausted(sorteios, retrocessos)

            # todo sorteio aceita; o novo nível herda a interseção das máscaras
            escolhido = int(rng.choice(candidatos))
            sorteios += 1
            tentativas[-1] += 1
            membros.append(escolhido)
            compativeis.append(compativeis[-1] & disjoint_mask(tabela, tabela[escolhido]))
            tabus.append([])
            tentativas.append(0)

        familia = DisjointFamily(self.n, tuple(sperm_at(self.n, i) for i in membros))
        return SearchResult(familia, sorteios, retrocessos)

    def _por_rejeicao(self, rng) -> SearchResult:
        membros = []
        sorteios = retrocessos = falhas = 0

        while len(membros) < self.k:
            if sorteios >= self.budget:
                raise Exhausted(sorteios, retrocessos)
            candidato = random_sperm(self.n, rng)
            sorteios += 1
            if all(is_disjoint(candidato, m) for m in membros):
                membros.append(candidato)
                falhas = 0
                continue
            # travou: descarta o membro mais recente e recomeça a contagem
            falhas += 1
            if falhas >= self.stall and membros:
                membros.pop()
                retrocessos += 1
                falhas = 0

        return SearchResult(DisjointFamily(self.n, tuple(membros)), sorteios, retrocessos)


def find_family(n: int, k: int, seed: RNGLike, budget: Optional[int] = None,
                stall: Optional[int] = None, compatible_pool: bool = False) -> DisjointFamily:
    return FamilySearch(n, k, budget, stall, compatible_pool).run(seed).family


@dataclass(frozen=True)
class ExperimentResult:
    runs: int
    successes: int
    distinct_families: int
    draws: int


def _uma_execucao(tarefa):
    n, k, budget, stall, compatible_pool, seed = tarefa
    try:
        resultado = FamilySearch(n, k, budget, stall, compatible_pool).run(seed)
    except Exhausted as e:
        return None, e.draws
    if resultado.family.k == n * n:
        # montagem valida a família como matriz Sudoku
        assemble(resultado.family)
    return resultado.family.canonical_key(), resultado.draws


def family_rate_experiment(runs: int, seed: int, n: int = 3, k: Optional[int] = None,
                           budget: Optional[int] = None, stall: Optional[int] = None,
                           workers: int = 1, compatible_pool: bool = False) -> ExperimentResult:
    """
    Repete a busca com sementes seed + i e conta sucessos e famílias distintas
    (igualdade de conjuntos de membros). Apenas relata a taxa obtida.
    """
    if runs < 1:
        raise DomainError('runs deve ser pelo menos 1')
    if k is None:
        k = n * n
    # valida os parâmetros antes de distribuir as execuções
    FamilySearch(n, k, budget, stall, compatible_pool)
    tarefas = [(n, k, budget, stall, compatible_pool, seed + i) for i in range(runs)]
    resultados = run_sharded(_uma_execucao, tarefas, workers)
    chaves = [chave for chave, _ in resultados if chave is not None]
    experimento = ExperimentResult(runs=runs, successes=len(chaves), distinct_families=len(set(chaves)),
                                   draws=sum(sorteios for _, sorteios in resultados))
    logging.info('Experimento n = {}, k = {}: {} sucessos em {} execuções, {} famílias distintas'.format(
        n, k, experimento.successes, runs, experimento.distinct_families))
    return experimento
