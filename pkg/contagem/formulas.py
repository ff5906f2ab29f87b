""" Fórmulas exatas: encontros, desarranjos, |Σ|, ν_n e as cotas de ξ, η e p """
from collections import defaultdict
from fractions import Fraction
from math import comb, factorial, prod

from matrizes.erros import DomainError

# Constantes publicadas (n = 2 e n = 3), usadas apenas como referência
PAPER_RESIDUALS = {2: 0, 3: 19008}
SIGMA_2 = 288
MU_2_2 = 12
SIGMA_3 = 6670903752021072936960
MU_3_3 = 18383222420692992
# famílias distintas obtidas em 1000 buscas aleatórias para n = 3
SAMPLED_FAMILIES_3 = 105


def _soma_alternada(m: int) -> int:
    # Σ_{k=0}^{m} (-1)^k m!/k!, cada parcela é inteira
    total = 0
    termo = 1
    for k in range(m, -1, -1):
        total += termo if k % 2 == 0 else -termo
        termo *= k if k else 1
    return total


def derangements(n: int) -> int:
    """d_n = n!·Σ_{k=0}^{n} (-1)^k/k!, em aritmética inteira."""
    if n < 0:
        raise DomainError('n deve ser não negativo')
    return _soma_alternada(n)


def rencontres(n: int, p: int) -> int:
    """
    Número e_p(n) de permutações de [n] com exatamente p pontos fixos.

    Parâmetros:
    - n (int): tamanho.
    - p (int): quantidade de pontos fixos, 0 ≤ p ≤ n.

    Retorno:
    - int: (n!/(p!(n-p)!))·Σ_{k=0}^{n-p} (-1)^k (n-p)!/k!.

    Lança:
    - DomainError: se p estiver fora de [0, n].
    """
    if n < 0 or p < 0 or p > n:
        raise DomainError('p = {} fora de [0, {}]'.format(p, n))
    return comb(n, p) * _soma_alternada(n - p)


def sigma_cardinality(n: int) -> int:
    if n < 1:
        raise DomainError('n deve ser positivo')
    return factorial(n) ** (2 * n)


def nu(n: int) -> int:
    """
    ν_n = (d_n·n! + n!·d_n - d_n²)^n, a expressão publicada para o caso básico.

    A expressão conta, para cada índice i, os pares (C_i, D_i) com ao menos um
    desarranjo; não coincide com basic_case_count e ultrapassa ξ_2.
    """
    if n < 1:
        raise DomainError('n deve ser positivo')
    d = derangements(n)
    f = factorial(n)
    return (2 * f * d - d * d) ** n


def basic_case_count(n: int) -> int:
    """Tuplas (C, D) com todos os θ(C_k) desarranjos ou todos os θ(D_l) desarranjos."""
    if n < 1:
        raise DomainError('n deve ser positivo')
    d = derangements(n)
    return 2 * (factorial(n) * d) ** n - d ** (2 * n)


def xi_lower(n: int) -> int:
    return basic_case_count(n)


def eta_from_xi(n: int, xi: int) -> int:
    """η_n = |Σ|·ξ_n/2 (pares não ordenados)."""
    total = sigma_cardinality(n) * xi
    if total % 2:
        raise DomainError('|Σ|·ξ = {} é ímpar'.format(total))
    return total // 2


def p_from_xi(n: int, xi: int) -> Fraction:
    """p(n) = ξ_n/(|Σ| - 1); para n = 1 não há pares e p(1) = 0/1."""
    denominador = sigma_cardinality(n) - 1
    if denominador == 0:
        return Fraction(0, 1)
    return Fraction(xi, denominador)


def eta_lower(n: int) -> int:
    return eta_from_xi(n, xi_lower(n))


def p_lower(n: int) -> Fraction:
    return p_from_xi(n, xi_lower(n))


def sigma_from_mu(n: int, mu_nn: int) -> int:
    """
    σ_n = (n²)!·μ(n, n): cada família completa gera (n²)! matrizes Sudoku,
    uma por rotulação dos membros.
    """
    if mu_nn < 0:
        raise DomainError('μ(n, n) deve ser não negativo')
    return factorial(n * n) * mu_nn


def mu_from_sigma(n: int, sigma: int) -> int:
    quociente, resto = divmod(sigma, factorial(n * n))
    if resto or sigma < 0:
        raise DomainError('{} não é múltiplo de ({}²)!'.format(sigma, n))
    return quociente


def xi_fixed_point_lattice(n: int) -> int:
    """
    ξ_n exato sem enumerar Σ.

    Para A fixa, o bloco (k, l) de B = CAD repete a célula de A se e somente se
    θ(C_k) fixa o deslocamento de linha do bloco e θ(D_l) fixa o de coluna.
    Os blocos fixados formam padrões X (por linha de blocos) e Y (por coluna
    de blocos); B é disjunta de A se e somente se X ∧ Y = 0. Uma linha de X
    com j uns é realizada por d_{n-j} permutações, e o mesmo vale para as
    colunas de Y. Somamos sobre X linha a linha, com estado igual ao
    multiconjunto das somas de coluna, e fechamos com o total de Y
    compatível em cada coluna.
    """
    if n < 1:
        raise DomainError('n deve ser positivo')
    # f[j]: permutações com exatamente j pontos fixos escolhidos; g[t]: total de Y numa coluna com t livres
    f = [derangements(n - j) for j in range(n + 1)]
    g = [sum(comb(t, j) * f[j] for j in range(t + 1)) for t in range(n + 1)]
    mascaras = []
    for m in range(1 << n):
        peso = f[bin(m).count('1')]
        if peso:
            mascaras.append((tuple((m >> l) & 1 for l in range(n)), peso))

    # estado: somas de coluna de X em ordem crescente
    estados = {(0,) * n: 1}
    for _ in range(n):
        novos = defaultdict(int)
        for estado, peso in estados.items():
            for mascara, w in mascaras:
                novos[tuple(sorted(s + b for s, b in zip(estado, mascara)))] += peso * w
        estados = novos
    return sum(peso * prod(g[n - s] for s in estado) for estado, peso in estados.items())


def decimal_display(value: Fraction, places: int = 3) -> str:
    """Arredondamento decimal exato (meio para cima) de uma fração não negativa."""
    escala = 10 ** places
    q = (value.numerator * escala * 2 + value.denominator) // (value.denominator * 2)
    inteiro, frac = divmod(q, escala)
    if places == 0:
        return str(inteiro)
    return '{}.{}'.format(inteiro, str(frac).zfill(places))
