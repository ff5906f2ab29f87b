""" Modo de amostragem para n ≥ 4, com intervalo de confiança exato """
import logging
from dataclasses import dataclass
from fractions import Fraction

from scipy.stats import binomtest

from contagem.formulas import sigma_cardinality
from matrizes.erros import DomainError
from matrizes.spermutacao import RNGLike, SPermMatrix, as_rng, random_sperm
from oraculo.oraculo import is_disjoint


@dataclass(frozen=True)
class SampleEstimate:
    """
    Estimativa de uma proporção de pares disjuntos.

    Atributos:
    - hits / samples: pares disjuntos sobre pares sorteados.
    - low, high: intervalo de Clopper-Pearson ao nível `confidence`.
    """
    n: int
    samples: int
    hits: int
    low: float
    high: float
    confidence: float

    @property
    def p_hat(self) -> Fraction:
        return Fraction(self.hits, self.samples)

    def contains(self, p: Fraction) -> bool:
        return self.low <= p <= self.high


def _intervalo(n, hits, samples, confidence):
    ic = binomtest(hits, samples).proportion_ci(confidence_level=confidence, method='exact')
    return SampleEstimate(n=n, samples=samples, hits=hits, low=float(ic.low), high=float(ic.high),
                          confidence=confidence)


def _outra(n, a, rng):
    # p(n) considera pares de matrizes distintas
    while True:
        b = random_sperm(n, rng)
        if b != a:
            return b


def estimate_disjoint_probability(n: int, samples: int, seed: RNGLike, confidence: float = 0.999) -> SampleEstimate:
    """
    Estima p(n) sorteando pares uniformes de matrizes distintas.

    Parâmetros:
    - n (int): parâmetro da grade (n ≥ 2).
    - samples (int): quantidade de pares.
    - seed: semente ou gerador numpy.
    - confidence (float): nível do intervalo.
    """
    if n < 2 or samples < 1:
        raise DomainError('Amostragem exige n ≥ 2 e ao menos um par')
    rng = as_rng(seed)
    acertos = 0
    for _ in range(samples):
        a = random_sperm(n, rng)
        acertos += is_disjoint(a, _outra(n, a, rng))
    estimativa = _intervalo(n, acertos, samples, confidence)
    logging.info('p({}) estimado: {}/{} [{:.5f}, {:.5f}]'.format(n, acertos, samples, estimativa.low, estimativa.high))
    return estimativa


def estimate_xi(a: SPermMatrix, samples: int, seed: RNGLike, confidence: float = 0.999) -> SampleEstimate:
    """Proporção de B ≠ A disjuntas de A; ξ ≈ proporção·(|Σ| - 1)."""
    if a.n < 2 or samples < 1:
        raise DomainError('Amostragem exige n ≥ 2 e ao menos uma matriz')
    rng = as_rng(seed)
    acertos = sum(is_disjoint(a, _outra(a.n, a, rng)) for _ in range(samples))
    return _intervalo(a.n, acertos, samples, confidence)


def scale_to_xi(estimate: SampleEstimate) -> tuple:
    """Intervalo da proporção convertido em intervalo de ξ."""
    fator = sigma_cardinality(estimate.n) - 1
    return estimate.low * fator, estimate.high * fator
