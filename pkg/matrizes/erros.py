""" Exceções do domínio """


class SPermError(Exception):
    """
    Classe base de todas as exceções levantadas pelos pacotes do projeto.
    """


class InvalidPermutation(SPermError, ValueError):
    """Sequência que não é uma bijeção de [0, n)."""


class NotPermutationMatrix(SPermError, ValueError):
    """Matriz binária n×n com alguma linha ou coluna sem exatamente um 1."""


class NotSPermutation(SPermError, ValueError):
    """
    Imagem densa que não é uma matriz S-permutação.

    Atributos:
    - kind (str): 'row', 'column' ou 'block', a primeira família violada.
    - where (tuple): índice da linha, da coluna ou coordenadas (k, l) do bloco.
    - count (int): quantidade de 1s encontrada no local.
    """

    def __init__(self, kind, where, count):
        self.kind = kind
        self.where = where
        self.count = count
        super().__init__('Restrição violada em {} {}: {} uns (esperado 1)'.format(kind, where, count))


class SizeMismatch(SPermError, ValueError):
    """Operandos com parâmetros n diferentes."""


class ShapeError(SPermError, ValueError):
    """Tabela ou sequência de bits com formato incompatível com n."""


class DomainError(SPermError, ValueError):
    """Argumento fora do domínio da fórmula ou da operação."""


class IncompleteFamily(SPermError, ValueError):
    """Família com menos de n² membros passada para a montagem do Sudoku."""


class NotDisjoint(SPermError, ValueError):
    """
    Dois membros de uma família compartilham uma célula.

    Atributos:
    - pair (tuple): índices (i, j) do primeiro par não disjunto.
    """

    def __init__(self, pair):
        self.pair = pair
        super().__init__('Membros {} e {} não são disjuntos'.format(*pair))


class NotSudoku(SPermError, ValueError):
    """Tabela que não é uma matriz Sudoku."""


class TooLarge(SPermError):
    """Operação exaustiva recusada pelo limite de tamanho."""


class Unsupported(SPermError):
    """Combinação de argumentos sem implementação (ex.: constantes publicadas para n ∉ {2, 3})."""


class InvarianceViolated(SPermError):
    """ξ_n dependeu da matriz A escolhida, o que invalida a definição de R_n."""


class Exhausted(SPermError):
    """
    Busca aleatória encerrada sem resultado dentro do orçamento.

    Atributos:
    - draws (int): candidatos sorteados.
    - backtracks (int): retrocessos executados.
    """

    def __init__(self, draws, backtracks=0):
        self.draws = draws
        self.backtracks = backtracks
        super().__init__('Orçamento esgotado após {} sorteios ({} retrocessos)'.format(draws, backtracks))
