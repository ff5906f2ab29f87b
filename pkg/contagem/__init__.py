""" Fórmulas de contagem e relatórios exatos """
from contagem.formulas import (basic_case_count, derangements, eta_from_xi, eta_lower, mu_from_sigma, nu, p_from_xi,
                               p_lower, rencontres, sigma_cardinality, sigma_from_mu, xi_fixed_point_lattice, xi_lower)
from contagem.relatorio import CountReport, exact_report, lower_report, report_to_record
