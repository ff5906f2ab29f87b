""" Configuração da linha de comando: flags, variáveis de ambiente e logging """
import logging
import os
from dataclasses import dataclass
from typing import Optional

import dotenv

from matrizes.erros import DomainError
from sudoku.busca import ORCAMENTO_PADRAO, TRAVAMENTO_PADRAO

dotenv.load_dotenv(dotenv.find_dotenv(usecwd=True))

SCHEMA_VERSION = 1
FORMATOS = ('table', 'json')
AMOSTRAS_PADRAO = 20000


def _resolve(flag: Optional[int], variavel: str, padrao: int) -> int:
    """
    Valor da flag quando informada (0 inclusive), senão da variável de
    ambiente, senão o padrão.

    Lança:
    - DomainError: variável de ambiente que não é inteiro.
    """
    if flag is not None:
        return flag
    valor = os.getenv(variavel)
    if valor is None or valor == '':
        return padrao
    try:
        return int(valor)
    except ValueError:
        logging.error('{} inválida: {}'.format(variavel, valor))
        raise DomainError('{} deve ser inteiro, recebido {!r}'.format(variavel, valor))


@dataclass(frozen=True)
class RunConfig:
    """
    Parâmetros de uma execução, resolvidos uma única vez: flag da linha de
    comando, depois variável de ambiente, depois o valor padrão.
    """
    subcommand: str
    n: int
    seed: Optional[int] = None
    k: Optional[int] = None
    workers: int = 1
    budget: int = ORCAMENTO_PADRAO
    stall: int = TRAVAMENTO_PADRAO
    runs: int = 1
    samples: int = AMOSTRAS_PADRAO
    source: str = 'paper_constants'
    output_format: str = 'table'
    output_path: Optional[str] = None
    force_large: bool = False
    timings: bool = False
    compatible_pool: bool = False
    dense: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise DomainError('--n deve ser pelo menos 1')
        if self.workers < 1:
            raise DomainError('--workers deve ser pelo menos 1')
        if self.budget < 1 or self.stall < 1:
            raise DomainError('--budget e --stall devem ser positivos')
        if self.runs < 1 or self.samples < 1:
            raise DomainError('--runs e --samples devem ser positivos')
        if self.seed is not None and not 0 <= self.seed < 2 ** 64:
            raise DomainError('--seed deve ser um inteiro sem sinal de 64 bits')
        if self.output_format not in FORMATOS:
            raise DomainError('Formato de saída desconhecido: {}'.format(self.output_format))

    @classmethod
    def from_args(cls, args) -> 'RunConfig':
        # opções de um só subcomando ficam com os padrões nos demais
        return cls(
            subcommand=args.command,
            n=args.n,
            seed=args.seed,
            k=getattr(args, 'k', None),
            workers=_resolve(args.workers, 'SPERM_WORKERS', 1),
            budget=_resolve(args.budget, 'SPERM_BUDGET', ORCAMENTO_PADRAO),
            stall=_resolve(args.stall, 'SPERM_STALL', TRAVAMENTO_PADRAO),
            runs=getattr(args, 'runs', 1),
            samples=getattr(args, 'samples', AMOSTRAS_PADRAO),
            source=getattr(args, 'source', 'paper_constants'),
            output_format=args.output_format,
            output_path=args.output,
            force_large=args.force_large,
            timings=args.timings,
            compatible_pool=getattr(args, 'compatible_pool', False),
            dense=getattr(args, 'dense', False),
        )


def configure_logging():
    """
    Logging do processo: stderr por padrão ou o arquivo em LOG_FILE; nível em
    LOG_LEVEL (padrão INFO). stdout fica reservado para os relatórios.
    """
    # nível desconhecido em LOG_LEVEL cai para INFO
    nivel = getattr(logging, os.getenv('LOG_LEVEL', 'INFO').upper(), logging.INFO)
    logging.basicConfig(filename=os.getenv('LOG_FILE') or None, level=nivel,
                        format='%(asctime)s - %(message)s')
