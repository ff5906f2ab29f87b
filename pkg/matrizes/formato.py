""" Formato de arquivo das matrizes (versionado, índices a partir de 0) """
from typing import Any, Dict

from matrizes.erros import ShapeError
from matrizes.spermutacao import SPermMatrix, to_dense

FORMAT_VERSION = 1


def matrix_to_record(a: SPermMatrix) -> Dict[str, Any]:
    """
    Registro compatível com JSON: {format_version, indexing, n, row_off, col_off}.
    row_off é indexado por linha de blocos e depois coluna de blocos; col_off
    por coluna de blocos e depois linha de blocos.
    """
    return {
        'format_version': FORMAT_VERSION,
        'indexing': '0-based',
        'n': a.n,
        'row_off': [list(p.images) for p in a.row_off],
        'col_off': [list(p.images) for p in a.col_off],
    }


def matrix_from_record(record: Dict[str, Any]) -> SPermMatrix:
    versao = record.get('format_version')
    if versao != FORMAT_VERSION:
        raise ShapeError('Versão de formato não suportada: {}'.format(versao))
    try:
        return SPermMatrix(int(record['n']), record['row_off'], record['col_off'])
    except KeyError as e:
        raise ShapeError('Campo ausente no registro: {}'.format(e))


def dense_text(a: SPermMatrix) -> str:
    """Exportação densa: n² linhas de n² caracteres '0'/'1'."""
    return to_dense(a).to_text()
