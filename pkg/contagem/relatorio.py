""" CountReport: valores exatos de ν, ξ, R, η e p com a procedência de cada campo """
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional

from contagem.formulas import (PAPER_RESIDUALS, basic_case_count, eta_from_xi, eta_lower, nu, p_from_xi, p_lower,
                               sigma_cardinality, xi_fixed_point_lattice, xi_lower)
from matrizes.erros import Unsupported

FORMULA = 'formula'
PAPER_FORMULA = 'paper_formula'
PAPER_CONSTANT = 'paper_constant'
ORACLE = 'oracle'
LATTICE = 'lattice'

SOURCES = ('paper_constants', 'oracle', 'lattice')


@dataclass(frozen=True)
class CountReport:
    """
    Contagens de um n com a procedência de cada campo (formula, paper_formula,
    paper_constant, oracle ou lattice).

    r é o resíduo medido contra o caso básico da própria fonte: para as
    constantes publicadas, ξ - ν; para oracle e lattice, ξ - basic.
    """
    n: int
    sigma_count: int
    nu: int
    basic: int
    xi_lower: int
    eta_lower: int
    p_lower: Fraction
    xi_exact: Optional[int] = None
    r: Optional[int] = None
    eta_exact: Optional[int] = None
    p_exact: Optional[Fraction] = None
    provenance: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.xi_exact is not None:
            if self.xi_exact < self.xi_lower:
                raise ValueError('ξ exato {} abaixo da cota {}'.format(self.xi_exact, self.xi_lower))
            if self.eta_exact is not None and 2 * self.eta_exact != self.sigma_count * self.xi_exact:
                raise ValueError('η exato {} incompatível com ξ = {}'.format(self.eta_exact, self.xi_exact))
        for p in (self.p_lower, self.p_exact):
            if p is not None and not 0 <= p <= 1:
                raise ValueError('Probabilidade fora de [0, 1]: {}'.format(p))


def _procedencia_base():
    return {'sigma_count': FORMULA, 'nu': PAPER_FORMULA, 'basic': FORMULA,
            'xi_lower': FORMULA, 'eta_lower': FORMULA, 'p_lower': FORMULA}


def lower_report(n: int) -> CountReport:
    """Somente as fórmulas fechadas; os campos exatos ficam ausentes."""
    return CountReport(n=n, sigma_count=sigma_cardinality(n), nu=nu(n), basic=basic_case_count(n),
                       xi_lower=xi_lower(n), eta_lower=eta_lower(n), p_lower=p_lower(n),
                       provenance=_procedencia_base())


def exact_report(n: int, source: str = 'paper_constants', workers: Optional[int] = None) -> CountReport:
    """
    Completa o relatório com ξ, R, η e p exatos.

    Parâmetros:
    - n (int): parâmetro da grade.
    - source (str): 'paper_constants' (resíduos publicados, n ∈ {2, 3}),
      'oracle' (enumeração exaustiva, n ≤ 3) ou 'lattice' (contagem por padrões
      de pontos fixos, qualquer n pequeno).
    - workers (int): processos do oráculo.

    Lança:
    - Unsupported: fonte desconhecida ou constantes publicadas para n ∉ {2, 3}.
    """
    if source == 'paper_constants':
        if n not in PAPER_RESIDUALS:
            raise Unsupported('Não há constantes publicadas para n = {}'.format(n))
        r = PAPER_RESIDUALS[n]
        xi = nu(n) + r
        rotulo = PAPER_CONSTANT
    elif source == 'oracle':
        # importação tardia: o oráculo depende deste pacote
        from oraculo.oraculo import ExhaustiveOracle
        oraculo = ExhaustiveOracle(n, workers=workers)
        xi = oraculo.xi_invariance_check().value
        r = oraculo.residual_exact()
        rotulo = ORACLE
    elif source == 'lattice':
        xi = xi_fixed_point_lattice(n)
        r = xi - basic_case_count(n)
        rotulo = LATTICE
    else:
        raise Unsupported('Fonte desconhecida: {}'.format(source))

    base = lower_report(n)
    procedencia = dict(base.provenance)
    procedencia.update({campo: rotulo for campo in ('xi_exact', 'r', 'eta_exact', 'p_exact')})
    logging.info('Relatório exato n = {} ({}): ξ = {}, R = {}'.format(n, source, xi, r))
    return CountReport(n=n, sigma_count=base.sigma_count, nu=base.nu, basic=base.basic,
                       xi_lower=base.xi_lower, eta_lower=base.eta_lower, p_lower=base.p_lower,
                       xi_exact=xi, r=r, eta_exact=eta_from_xi(n, xi), p_exact=p_from_xi(n, xi),
                       provenance=procedencia)


def _fracao(p: Fraction) -> Dict[str, str]:
    return {'num': str(p.numerator), 'den': str(p.denominator)}


def report_to_record(report: CountReport) -> Dict[str, Any]:
    """
    Registro estável: inteiros como strings decimais (σ_3 não cabe em 64 bits)
    e racionais como pares {num, den}. Campos ausentes são omitidos.
    """
    registro = {'n': str(report.n), 'provenance': dict(sorted(report.provenance.items()))}
    for nome in ('sigma_count', 'nu', 'basic', 'xi_lower', 'eta_lower', 'xi_exact', 'r', 'eta_exact'):
        valor = getattr(report, nome)
        if valor is not None:
            registro[nome] = str(valor)
    for nome in ('p_lower', 'p_exact'):
        valor = getattr(report, nome)
        if valor is not None:
            registro[nome] = _fracao(valor)
    return registro
