""" Testes do CountReport e da sua serialização """
import json
from fractions import Fraction

import pytest

from contagem.relatorio import (LATTICE, ORACLE, PAPER_CONSTANT, CountReport, exact_report, lower_report,
                                report_to_record)
from matrizes.erros import Unsupported


def test_relatorio_de_cotas():
    """
    Sem fonte exata, os campos exatos ficam ausentes.
    """
    r = lower_report(5)
    assert r.xi_exact is None and r.r is None and r.eta_exact is None and r.p_exact is None
    assert r.provenance['nu'] == 'paper_formula'
    assert r.provenance['xi_lower'] == 'formula'


def test_constantes_publicadas():
    r2 = exact_report(2, 'paper_constants')
    assert (r2.xi_exact, r2.r, r2.eta_exact, r2.p_exact) == (9, 0, 72, Fraction(3, 5))
    r3 = exact_report(3, 'paper_constants')
    assert (r3.nu, r3.r, r3.xi_exact, r3.eta_exact) == (8000, 19008, 27008, 630042624)
    assert r3.p_exact == Fraction(27008, 46655)
    assert r3.provenance['xi_exact'] == PAPER_CONSTANT
    with pytest.raises(Unsupported):
        exact_report(4, 'paper_constants')


def test_fonte_reticulado():
    r = exact_report(2, 'lattice')
    assert (r.xi_exact, r.r, r.eta_exact, r.p_exact) == (7, 0, 56, Fraction(7, 15))
    assert r.provenance['r'] == LATTICE


def test_fonte_oraculo():
    r = exact_report(2, 'oracle', workers=1)
    assert (r.xi_exact, r.r, r.eta_exact) == (7, 0, 56)
    assert r.provenance['p_exact'] == ORACLE


def test_fonte_desconhecida():
    with pytest.raises(Unsupported):
        exact_report(2, 'palpite')


def test_invariantes_do_relatorio():
    base = lower_report(2)
    with pytest.raises(ValueError):
        CountReport(n=2, sigma_count=16, nu=9, basic=7, xi_lower=7, eta_lower=56, p_lower=base.p_lower, xi_exact=6)
    with pytest.raises(ValueError):
        CountReport(n=2, sigma_count=16, nu=9, basic=7, xi_lower=7, eta_lower=56, p_lower=base.p_lower,
                    xi_exact=7, eta_exact=57)


def test_registro_estavel():
    """
    Inteiros viram strings decimais e frações viram {num, den}; o registro é JSON válido.
    """
    registro = report_to_record(exact_report(3, 'paper_constants'))
    assert registro['eta_exact'] == '630042624'
    assert registro['p_exact'] == {'num': '27008', 'den': '46655'}
    assert json.loads(json.dumps(registro)) == registro
    assert 'xi_exact' not in report_to_record(lower_report(5))
