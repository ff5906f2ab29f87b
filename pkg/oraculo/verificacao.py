""" Bateria de verificação: oráculo exaustivo contra fórmulas e constantes de referência """
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from contagem.formulas import (MU_2_2, MU_3_3, PAPER_RESIDUALS, SAMPLED_FAMILIES_3, SIGMA_2, SIGMA_3,
                               basic_case_count, decimal_display, eta_from_xi, p_from_xi, sigma_cardinality,
                               sigma_from_mu, xi_fixed_point_lattice)
from contagem.relatorio import exact_report
from matrizes.bits import LIMITE_EXAUSTIVO, dense_table
from matrizes.erros import DomainError, InvarianceViolated, TooLarge
from matrizes.spermutacao import (cad_dense_factors, compose_cad, enumerate_sigma, random_factors, random_sperm,
                                  sperm_at, to_dense, validate_sperm)
from oraculo.amostragem import estimate_disjoint_probability, estimate_xi, scale_to_xi
from oraculo.oraculo import ExhaustiveOracle, summarize_classification

PASS = 'pass'
FAIL = 'fail'
PAPER_MISMATCH = 'paper_mismatch'

EXHAUSTIVE = 'exhaustive'
SAMPLING = 'sampling'

# maior n para o qual a contagem por padrões de pontos fixos entra na bateria por amostragem
LIMITE_RETICULADO = 7


@dataclass(frozen=True)
class CheckResult:
    """
    Uma linha do relatório. Valores são strings decimais para que números
    maiores que 64 bits sejam emitidos sem perda.

    status PAPER_MISMATCH marca divergência entre uma constante publicada e a
    verdade exaustiva; é informativo e não reprova a verificação.
    """
    name: str
    n: int
    expected: str
    actual: str
    status: str
    elapsed_ms: Optional[float] = None

    @property
    def failed(self) -> bool:
        return self.status == FAIL


@dataclass(frozen=True)
class VerificationReport:
    n: int
    mode: str
    checks: Tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not any(c.failed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.failed]


def _linha(name, expected, actual, informativo=False):
    if expected == actual:
        status = PASS
    else:
        status = PAPER_MISMATCH if informativo else FAIL
    return name, str(expected), str(actual), status


class VerificationSuite:
    """
    Executa todas as verificações de um n. Para n ≤ LIMITE_EXAUSTIVO usa o
    oráculo exaustivo; acima disso só roda com force_large, no modo de
    amostragem com intervalo de confiança.
    """

    def __init__(self, n: int, workers: Optional[int] = None, seed: int = 0, samples: int = 20000,
                 force_large: bool = False, timings: bool = False):
        """
        Parâmetros:
        - n (int): parâmetro da grade.
        - workers (int): processos do oráculo.
        - seed (int): semente das matrizes e fatores sorteados.
        - samples (int): pares sorteados no modo de amostragem.
        - force_large (bool): libera n > LIMITE_EXAUSTIVO em modo de amostragem.
        - timings (bool): registra o tempo de cada grupo de verificações.

        Lança:
        - TooLarge: n > LIMITE_EXAUSTIVO sem force_large.
        """
        if n < 1:
            raise DomainError('n deve ser positivo')
        if n > LIMITE_EXAUSTIVO and not force_large:
            raise TooLarge('verify recusado para n = {}: o oráculo exaustivo vai até n = {}; '
                           'use --force-large para o modo de amostragem'.format(n, LIMITE_EXAUSTIVO))
        self.n = n
        self.workers = workers
        self.seed = seed
        self.samples = samples
        self.timings = timings
        self.mode = EXHAUSTIVE if n <= LIMITE_EXAUSTIVO else SAMPLING
        self._oraculo = None

    @property
    def oracle(self) -> ExhaustiveOracle:
        if self._oraculo is None:
            self._oraculo = ExhaustiveOracle(self.n, workers=self.workers)
        return self._oraculo

    def _grupos(self):
        if self.mode == SAMPLING:
            return [self._reticulado, self._amostragem, self._constantes]
        grupos = [self._enumeracao, self._ida_e_volta, self._invariancia, self._classificacao,
                  self._bijecao, self._produto_denso, self._probabilidade, self._publicados]
        if self.n == 2:
            grupos.append(self._censo)
        grupos.append(self._constantes)
        return grupos

    def run(self) -> VerificationReport:
        logging.info('Verificação n = {} em modo {}'.format(self.n, self.mode))
        linhas = []
        for grupo in self._grupos():
            inicio = time.perf_counter()
            resultado = grupo()
            decorrido = round((time.perf_counter() - inicio) * 1000, 3) if self.timings else None
            for nome, esperado, obtido, status in resultado:
                linhas.append(CheckResult(nome, self.n, esperado, obtido, status, decorrido))
                if status == FAIL:
                    logging.error('Falha em {} (n = {}): esperado {}, obtido {}'.format(nome, self.n, esperado, obtido))
        relatorio = VerificationReport(self.n, self.mode, tuple(linhas))
        logging.info('Verificação n = {}: {} verificações, {} falhas'.format(
            self.n, len(linhas), len(relatorio.failures)))
        return relatorio

    def _rng(self, deslocamento: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, deslocamento])

    # --- modo exaustivo ---

    def _enumeracao(self):
        total = sigma_cardinality(self.n)
        contados = sum(1 for _ in enumerate_sigma(self.n))
        distintos = len(np.unique(dense_table(self.n), axis=0))
        return [_linha('enumeration_count', total, contados),
                _linha('enumeration_distinct', total, distintos)]

    def _ida_e_volta(self):
        rng = self._rng(1)
        total = sigma_cardinality(self.n)
        indices = rng.integers(0, total, size=min(1000, total))
        falhas = 0
        for i in indices:
            a = sperm_at(self.n, int(i))
            if a.rank != int(i) or validate_sperm(to_dense(a)) != a:
                falhas += 1
        return [_linha('dense_round_trip', 0, falhas)]

    def _invariancia(self):
        esperado = xi_fixed_point_lattice(self.n)
        basico = basic_case_count(self.n)
        invariancia = self.oracle.xi_invariance_check()
        obtido = invariancia.value if invariancia.constant else list(invariancia.distinct)
        a = random_sperm(self.n, self._rng(2))
        linhas = [_linha('xi_invariance', esperado, obtido),
                  _linha('xi_single', esperado, self.oracle.xi_exact(a)),
                  _linha('eta_exact', eta_from_xi(self.n, esperado), self.oracle.eta_exact())]
        try:
            linhas.append(_linha('residual', esperado - basico, self.oracle.residual_exact()))
        except InvarianceViolated as e:
            linhas.append(_linha('residual', esperado - basico, 'indefinido: {}'.format(e)))
        return linhas

    def _classificacao(self):
        a = random_sperm(self.n, self._rng(3))
        resumo = summarize_classification(self.oracle.cad_classify(a))
        basico = basic_case_count(self.n)
        return [_linha('classification_total', sigma_cardinality(self.n), resumo.total_pairs),
                _linha('classification_basic', basico, resumo.basic_pairs),
                _linha('classification_basic_disjoint', basico, resumo.basic_disjoint),
                _linha('classification_residual', xi_fixed_point_lattice(self.n) - basico, resumo.residual)]

    def _bijecao(self):
        if self.n <= 2:
            matrizes = list(enumerate_sigma(self.n))
        else:
            rng = self._rng(4)
            matrizes = [random_sperm(self.n, rng) for _ in range(5)]
        falhas = sum(not self.oracle.cad_bijection_check(a) for a in matrizes)
        return [_linha('cad_bijection', 0, falhas)]

    def _produto_denso(self):
        rng = self._rng(5)
        falhas = 0
        for _ in range(100):
            a = random_sperm(self.n, rng)
            f = random_factors(self.n, rng)
            c, d = cad_dense_factors(f)
            if not np.array_equal(c @ to_dense(a).as_array() @ d, to_dense(compose_cad(a, f)).as_array()):
                falhas += 1
        return [_linha('cad_dense_product', 0, falhas)]

    def _probabilidade(self):
        xi = self.oracle.xi_invariance_check().value
        total = sigma_cardinality(self.n)
        pares = comb(total, 2)
        pela_contagem = Fraction(self.oracle.eta_exact(), pares) if pares else Fraction(0, 1)
        return [_linha('probability_identity', p_from_xi(self.n, xi), pela_contagem)]

    def _publicados(self):
        if self.n not in PAPER_RESIDUALS:
            return []
        publicado = exact_report(self.n, 'paper_constants')
        xi = self.oracle.xi_invariance_check().value
        return [_linha('paper_xi', publicado.xi_exact, xi, informativo=True),
                _linha('paper_eta', publicado.eta_exact, self.oracle.eta_exact(), informativo=True),
                _linha('paper_residual', publicado.r, self.oracle.residual_exact(), informativo=True),
                _linha('paper_probability', decimal_display(publicado.p_exact),
                       decimal_display(p_from_xi(self.n, xi)), informativo=True)]

    def _censo(self):
        # importação tardia: sudoku depende do oráculo
        from sudoku.censo import census_n2
        censo = census_n2()
        return [_linha('census_families', MU_2_2, censo.families),
                _linha('census_sudoku_count', SIGMA_2, censo.sudoku_count),
                _linha('census_direct_tables', SIGMA_2, censo.direct_tables),
                _linha('census_disjoint_pairs', self.oracle.eta_exact(), censo.disjoint_pairs)]

    # --- constantes de referência (qualquer modo) ---

    def _constantes(self):
        return [_linha('sigma_from_mu_n2', SIGMA_2, sigma_from_mu(2, MU_2_2)),
                _linha('sigma_from_mu_n3', SIGMA_3, sigma_from_mu(3, MU_3_3)),
                _linha('sampled_families_matrices', 38102400, factorial(9) * SAMPLED_FAMILIES_3)]

    # --- modo de amostragem ---

    def _reticulado(self):
        if self.n > LIMITE_RETICULADO:
            return []
        xi = xi_fixed_point_lattice(self.n)
        return [_linha('lattice_above_basic', True, xi >= basic_case_count(self.n))]

    def _amostragem(self):
        estimativa = estimate_disjoint_probability(self.n, self.samples, self._rng(6))
        baixo, alto = scale_to_xi(estimativa)
        intervalo = '[{:.6f}, {:.6f}]'.format(estimativa.low, estimativa.high)
        linhas = [('sampled_probability', 'p_hat = {}/{}'.format(estimativa.hits, estimativa.samples),
                   intervalo, PASS)]
        if self.n <= LIMITE_RETICULADO:
            p = p_from_xi(self.n, xi_fixed_point_lattice(self.n))
            linhas.append(('sampled_probability_covers_lattice', decimal_display(p, 6), intervalo,
                           PASS if estimativa.contains(p) else FAIL))
        linhas.append(('sampled_xi_interval', 'p·{}'.format(sigma_cardinality(self.n) - 1),
                       '[{:.0f}, {:.0f}]'.format(baixo, alto), PASS))

        # ξ(A) de uma única A sorteada, pelo mesmo número de sorteios
        a = random_sperm(self.n, self._rng(7))
        baixo, alto = scale_to_xi(estimate_xi(a, self.samples, self._rng(8)))
        intervalo = '[{:.0f}, {:.0f}]'.format(baixo, alto)
        if self.n <= LIMITE_RETICULADO:
            xi = xi_fixed_point_lattice(self.n)
            linhas.append(('sampled_xi_single', str(xi), intervalo, PASS if baixo <= xi <= alto else FAIL))
        else:
            linhas.append(('sampled_xi_single', 'ξ(A) da matriz {}'.format(a.rank), intervalo, PASS))
        return linhas


def verification_to_record(report: VerificationReport, timings: bool = False) -> Dict[str, Any]:
    """Registro JSON; elapsed_ms só aparece com timings para manter a saída reprodutível."""
    checks = []
    for c in report.checks:
        item = {'name': c.name, 'n': c.n, 'expected': c.expected, 'actual': c.actual, 'status': c.status}
        if timings and c.elapsed_ms is not None:
            item['elapsed_ms'] = c.elapsed_ms
        checks.append(item)
    return {'n': report.n, 'mode': report.mode, 'passed': report.passed, 'checks': checks}
