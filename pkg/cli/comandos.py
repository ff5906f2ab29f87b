""" Ponto de entrada da linha de comando: formulas, verify, generate, enumerate e experiment """
import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from cli.config import SCHEMA_VERSION, RunConfig, configure_logging
from contagem.formulas import PAPER_RESIDUALS, decimal_display
from contagem.relatorio import SOURCES, CountReport, exact_report, lower_report, report_to_record
from matrizes.erros import Exhausted, InvarianceViolated, SPermError, TooLarge
from matrizes.formato import dense_text, matrix_to_record
from matrizes.spermutacao import enumerate_sigma
from oraculo.verificacao import VerificationSuite, verification_to_record
from sudoku.busca import FamilySearch, family_rate_experiment
from sudoku.familias import assemble, family_to_record

OK = 0
CHECK_FAILED = 1
USAGE_ERROR = 2
TOO_LARGE = 3
EXHAUSTED = 4

Saida = Tuple[Dict[str, Any], str, int]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='sperm', description='Matrizes S-permutação: contagens, verificação e geração.')
    comum = argparse.ArgumentParser(add_help=False)
    comum.add_argument('--n', type=int, required=True, help='Parâmetro da grade (matrizes n²×n²)')
    comum.add_argument('--seed', type=int, help='Semente (inteiro sem sinal de 64 bits)')
    comum.add_argument('--workers', type=int, help='Processos do oráculo. Default: SPERM_WORKERS ou 1')
    comum.add_argument('--budget', type=int, help='Limite de sorteios da busca. Default: SPERM_BUDGET')
    comum.add_argument('--stall', type=int, help='Limite de travamento da busca. Default: SPERM_STALL')
    comum.add_argument('--output-format', choices=('table', 'json'), default='table')
    comum.add_argument('--output', help='Arquivo de saída (prefixo dos arquivos em generate)')
    comum.add_argument('--force-large', action='store_true', help='Libera n > 3 (amostragem em verify)')
    comum.add_argument('--timings', action='store_true', help='Inclui tempos em milissegundos')

    sub = parser.add_subparsers(dest='command', required=True)
    formulas = sub.add_parser('formulas', parents=[comum], help='Cotas inferiores e valores exatos')
    formulas.add_argument('--source', choices=SOURCES, default='paper_constants',
                          help='Origem dos campos exatos')
    verify = sub.add_parser('verify', parents=[comum], help='Bateria do oráculo exaustivo')
    verify.add_argument('--samples', type=int, default=20000, help='Pares sorteados no modo de amostragem')
    generate = sub.add_parser('generate', parents=[comum], help='Busca uma família disjunta')
    generate.add_argument('--k', type=int, help='Tamanho da família. Default: n²')
    generate.add_argument('--compatible-pool', action='store_true',
                          help='Sorteia entre as matrizes ainda compatíveis (n ≤ 3)')
    enumerate_ = sub.add_parser('enumerate', parents=[comum], help='Lista todas as matrizes de Σ')
    enumerate_.add_argument('--dense', action='store_true', help='Inclui a imagem densa 0/1 de cada matriz')
    experiment = sub.add_parser('experiment', parents=[comum], help='Taxa de sucesso da busca')
    experiment.add_argument('--k', type=int, help='Tamanho da família. Default: n²')
    experiment.add_argument('--runs', type=int, default=100, help='Quantidade de execuções')
    experiment.add_argument('--compatible-pool', action='store_true',
                            help='Sorteia entre as matrizes ainda compatíveis (n ≤ 3)')
    return parser


def _tabela(linhas: List[List[str]]) -> str:
    larguras = [max(len(linha[i]) for linha in linhas) for i in range(len(linhas[0]))]
    return '\n'.join('  '.join(c.ljust(w) for c, w in zip(linha, larguras)).rstrip() for linha in linhas)


def _texto_relatorio(report: CountReport) -> str:
    linhas = [['campo', 'valor', 'procedência']]
    for campo in ('sigma_count', 'nu', 'basic', 'xi_lower', 'eta_lower', 'p_lower',
                  'xi_exact', 'r', 'eta_exact', 'p_exact'):
        valor = getattr(report, campo)
        if valor is None:
            continue
        if campo.startswith('p_'):
            valor = '{} (≈ {})'.format(valor, decimal_display(valor))
        linhas.append([campo, str(valor), report.provenance.get(campo, '')])
    return 'n = {}\n{}'.format(report.n, _tabela(linhas))


def cmd_formulas(config: RunConfig) -> Saida:
    """
    Cotas inferiores sempre; campos exatos da fonte escolhida quando
    disponíveis (as constantes publicadas só existem para n ∈ {2, 3}).
    """
    if config.source == 'paper_constants' and config.n not in PAPER_RESIDUALS:
        report = lower_report(config.n)
    else:
        report = exact_report(config.n, config.source, workers=config.workers)
    return report_to_record(report), _texto_relatorio(report), OK


def cmd_verify(config: RunConfig) -> Saida:
    suite = VerificationSuite(config.n, workers=config.workers, seed=config.seed or 0, samples=config.samples,
                              force_large=config.force_large, timings=config.timings)
    report = suite.run()
    cabecalho = ['verificação', 'esperado', 'obtido', 'status']
    if config.timings:
        cabecalho.append('ms')
    linhas = [cabecalho]
    for c in report.checks:
        linha = [c.name, c.expected, c.actual, c.status]
        if config.timings:
            linha.append('{:.1f}'.format(c.elapsed_ms))
        linhas.append(linha)
    resumo = 'n = {} ({}): {}'.format(report.n, report.mode,
                                      'todas as verificações passaram' if report.passed
                                      else '{} falha(s)'.format(len(report.failures)))
    texto = '{}\n{}'.format(_tabela(linhas), resumo)
    return verification_to_record(report, config.timings), texto, OK if report.passed else CHECK_FAILED


def _gravar(caminho: Path, conteudo: str):
    try:
        caminho.write_text(conteudo + '\n', encoding='utf-8')
        logging.info('Arquivo {} gravado'.format(caminho))
    except OSError as e:
        logging.error('Erro ao gravar {}: {}'.format(caminho, e))
        raise


def cmd_generate(config: RunConfig) -> Saida:
    """
    Busca uma família de tamanho k; com k = n² também monta a matriz Sudoku.
    Com --output, grava <prefixo>.family.json e <prefixo>.sudoku.txt.
    """
    busca = FamilySearch(config.n, config.k, config.budget, config.stall, config.compatible_pool)
    resultado = busca.run(config.seed)
    familia = resultado.family
    sudoku = assemble(familia).to_text() if familia.k == config.n * config.n else None

    registro = {'family': family_to_record(familia), 'draws': resultado.draws,
                'backtracks': resultado.backtracks, 'sudoku': sudoku}
    if config.output_path:
        prefixo = Path(config.output_path)
        _gravar(prefixo.with_name(prefixo.name + '.family.json'),
                json.dumps(registro['family'], indent=2, sort_keys=True))
        if sudoku is not None:
            _gravar(prefixo.with_name(prefixo.name + '.sudoku.txt'), sudoku)

    texto = 'família n = {}, k = {}: {} sorteios, {} retrocessos'.format(
        config.n, familia.k, resultado.draws, resultado.backtracks)
    if sudoku is not None:
        texto = '{}\n{}'.format(texto, sudoku)
    return registro, texto, OK


def cmd_enumerate(config: RunConfig, destino) -> int:
    """
    Escreve um registro por linha na ordem de enumeração e, por último, a
    contagem. Em json, linhas JSON; em table, 'índice row_off col_off'. Com
    --dense, cada matriz leva também a imagem densa (campo 'dense' em json,
    linhas '0'/'1' após o registro em table).
    """
    total = 0
    for a in enumerate_sigma(config.n, allow_large=config.force_large):
        if config.output_format == 'json':
            registro = matrix_to_record(a)
            if config.dense:
                registro['dense'] = dense_text(a).split('\n')
            destino.write(json.dumps(registro, sort_keys=True) + '\n')
        else:
            destino.write('{} {} {}\n'.format(total, [list(p.images) for p in a.row_off],
                                              [list(p.images) for p in a.col_off]))
            if config.dense:
                destino.write(dense_text(a) + '\n')
        total += 1
    if config.output_format == 'json':
        destino.write(json.dumps({'schema_version': SCHEMA_VERSION, 'command': 'enumerate',
                                  'n': config.n, 'count': total}, sort_keys=True) + '\n')
    else:
        destino.write('total: {}\n'.format(total))
    logging.info('Enumeração n = {}: {} matrizes'.format(config.n, total))
    return OK


def cmd_experiment(config: RunConfig) -> Saida:
    resultado = family_rate_experiment(config.runs, config.seed or 0, n=config.n, k=config.k,
                                       budget=config.budget, stall=config.stall, workers=config.workers,
                                       compatible_pool=config.compatible_pool)
    texto = _tabela([['execuções', 'sucessos', 'famílias distintas', 'sorteios'],
                     [str(resultado.runs), str(resultado.successes), str(resultado.distinct_families),
                      str(resultado.draws)]])
    return asdict(resultado), texto, OK


COMANDOS = {'formulas': cmd_formulas, 'verify': cmd_verify, 'generate': cmd_generate, 'experiment': cmd_experiment}


def _emitir(config: RunConfig, registro: Dict[str, Any], texto: str):
    if config.output_format == 'json':
        envelope = {'schema_version': SCHEMA_VERSION, 'command': config.subcommand, 'n': config.n,
                    'result': registro}
        conteudo = json.dumps(envelope, indent=2, sort_keys=True, ensure_ascii=False)
    else:
        conteudo = texto
    # em generate, --output é o prefixo dos arquivos da família e o relatório vai para stdout
    if config.output_path and config.subcommand != 'generate':
        _gravar(Path(config.output_path), conteudo)
    else:
        print(conteudo)


def _executar(config: RunConfig) -> int:
    if config.subcommand == 'enumerate':
        if config.output_path:
            with open(config.output_path, 'w', encoding='utf-8') as destino:
                return cmd_enumerate(config, destino)
        return cmd_enumerate(config, sys.stdout)
    registro, texto, codigo = COMANDOS[config.subcommand](config)
    _emitir(config, registro, texto)
    return codigo


def main(argv: Optional[List[str]] = None) -> int:
    """
    Executa um subcomando e devolve o código de saída: 0 sucesso, 1 falha de
    verificação, 2 erro de uso, 3 tamanho recusado, 4 busca esgotada.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging()
    if args.command == 'generate' and args.seed is None:
        parser.error('generate exige --seed')

    # erros de domínio viram códigos de saída; o relatório só vai para stdout em caso de sucesso
    try:
        config = RunConfig.from_args(args)
        return _executar(config)
    except TooLarge as e:
        logging.error('Recusado: {}'.format(e))
        print('erro: {}'.format(e), file=sys.stderr)
        return TOO_LARGE
    except Exhausted as e:
        logging.error('Busca esgotada: {}'.format(e))
        print('erro: {}'.format(e), file=sys.stderr)
        return EXHAUSTED
    except InvarianceViolated as e:
        logging.error('Verificação interrompida: {}'.format(e))
        print('erro: {}'.format(e), file=sys.stderr)
        return CHECK_FAILED
    except SPermError as e:
        logging.error('Argumentos inválidos: {}'.format(e))
        print('erro: {}'.format(e), file=sys.stderr)
        return USAGE_ERROR
