""" Permutações, matrizes S-permutação e suas codificações """
from matrizes.bits import LIMITE_EXAUSTIVO, DenseBits, dense_table, disjoint_mask
from matrizes.permutacao import Perm, theta, theta_inv
from matrizes.spermutacao import (CadFactors, SPermMatrix, compose_cad, enumerate_factors, enumerate_sigma,
                                  factors_at, random_sperm, sigma_size, sperm_at, to_dense, validate_sperm)
