""" Divisão em fatias de índices e execução em processos """
import logging
from multiprocessing import Pool
from typing import Callable, Iterable, List, Tuple


def shard_ranges(total: int, shards: int) -> List[Tuple[int, int]]:
    """
    Divide [0, total) em até `shards` intervalos contíguos, em ordem.

    Retorno:
    - list: pares (início, fim); a concatenação cobre [0, total) sem sobreposição.
    """
    if total <= 0:
        return []
    shards = max(1, min(shards, total))
    base, resto = divmod(total, shards)
    fatias = []
    inicio = 0
    for s in range(shards):
        fim = inicio + base + (1 if s < resto else 0)
        fatias.append((inicio, fim))
        inicio = fim
    return fatias


def run_sharded(func: Callable, tasks: Iterable, workers: int) -> list:
    """
    Aplica `func` a cada tarefa e devolve os resultados na ordem das tarefas,
    qualquer que seja o número de processos.
    """
    tarefas = list(tasks)
    if workers <= 1 or len(tarefas) <= 1:
        return [func(t) for t in tarefas]

    processos = min(workers, len(tarefas))
    logging.info('Executando {} fatias em {} processos'.format(len(tarefas), processos))
    with Pool(processes=processos) as pool:
        return pool.map(func, tarefas)
