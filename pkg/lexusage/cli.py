"""Command-line interface: argument parsing, logging setup and dispatch."""

import argparse
import logging
import sys
from configparser import Error as ConfigParserError
from dataclasses import replace
from typing import Sequence

import structlog

from .commands import (cmd_analyze, cmd_compare, cmd_curves, cmd_merge,
                       cmd_rank, cmd_table_demo)
from .config import Config
from .formats import OutputFormat
from .lexicon.kinds import MEASURE_NAMES, measure_from_name

DEFAULT_SETTINGS = 'lex-usage-settings.cfg'
"""Settings file read when ``--settings`` is omitted (if it exists)"""


def positive_int(s: str) -> int:
    """Convert a string into a positive integer.

    Args:
        s: the string to convert

    Raises:
        ArgumentTypeError: \
            if the input string does not represent
            a positive integer

    Returns:
        an int with the value represented by the input string
    """
    try:
        n = int(s)
    except (ValueError, TypeError):
        pass
    else:
        if n >= 1:
            return n
    raise argparse.ArgumentTypeError(f"invalid positive integer: '{s}'")


def unit_interval_float(s: str) -> float:
    """Convert a string into a float between 0 and 1.

    Args:
        s: the string to convert

    Raises:
        ArgumentTypeError: \
            if the input string does not represent
            a number between 0 and 1

    Returns:
        a float with the value represented by the input string
    """
    try:
        x = float(s)
    except (ValueError, TypeError):
        pass
    else:
        if 0 <= x <= 1:
            return x
    raise argparse.ArgumentTypeError(
        f"invalid value (must be between 0 and 1): '{s}'")


def parse_args(args: Sequence[str]) -> argparse.Namespace:
    """Parse command-line arguments.

    Args:
        args: the arguments to parse

    Returns:
        the parsed arguments
    """
    parser = argparse.ArgumentParser(
        prog='lexusage',
        description='Word usage measures and ranked dictionaries.')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--debug',
                           '-d',
                           help='show verbose log for debugging',
                           action='store_true')
    verbosity.add_argument('--quiet',
                           '-q',
                           help='print only warnings and errors',
                           action='store_true')
    parser.add_argument('--settings',
                        help='settings file (default: '
                        f'{DEFAULT_SETTINGS}, if it exists)')

    output_options = argparse.ArgumentParser(add_help=False)
    output_options.add_argument('--output',
                                '-o',
                                help='output file (default: standard output)')
    output_options.add_argument('--format',
                                '-f',
                                help='output format',
                                choices=OutputFormat.choices())

    subparsers = parser.add_subparsers(dest='cmd', required=True)

    parser_analyze = subparsers.add_parser(
        'analyze',
        parents=[output_options],
        help='count the words of a corpus (directory or manifest)')
    parser_analyze.add_argument('corpus',
                                help='directory of UTF-8 texts or manifest '
                                'file with lines "name<TAB>path"')
    parser_analyze.add_argument('--no-hyphen-letter',
                                dest='hyphen_is_letter',
                                help='treat hyphens as separators',
                                action='store_const',
                                const=False)
    parser_analyze.add_argument('--no-case-fold',
                                dest='case_fold',
                                help='keep the case of the words',
                                action='store_const',
                                const=False)
    parser_analyze.add_argument('--extra-letters',
                                help='additional characters treated as '
                                'letters')
    parser_analyze.add_argument('--workers',
                                help='number of worker processes',
                                type=positive_int)

    parser_rank = subparsers.add_parser('rank',
                                        parents=[output_options],
                                        help='rank the words of a table')
    parser_rank.add_argument('table', help='table file')
    parser_rank.add_argument('--measure',
                             '-m',
                             help='usage measure',
                             choices=MEASURE_NAMES,
                             required=True)
    parser_rank.add_argument('--a',
                             help='parameter of the generalized measure',
                             type=unit_interval_float)
    parser_rank.add_argument('--top',
                             '-n',
                             help='keep only this number of words',
                             type=positive_int)
    parser_rank.add_argument('--min-freq',
                             help='keep only words with at least this '
                             'frequency (frequency measure only)',
                             type=positive_int)

    parser_demo = subparsers.add_parser(
        'table-demo',
        parents=[output_options],
        help="compare U, U_m and U_R on Juilland and Carroll's data")
    parser_demo.add_argument('--counts',
                             help='emit the demo frequencies as a table',
                             action='store_true')

    parser_compare = subparsers.add_parser(
        'compare',
        parents=[output_options],
        help='compare the top zones of two dictionaries')
    parser_compare.add_argument('dictionary_a', help='first dictionary')
    parser_compare.add_argument('dictionary_b', help='second dictionary')
    parser_compare.add_argument('--top',
                                '-n',
                                help='size of the top zones',
                                type=positive_int,
                                required=True)

    parser_merge = subparsers.add_parser(
        'merge',
        parents=[output_options],
        help='pool tables or U_R dictionaries')
    parser_merge.add_argument('inputs',
                              help='tables or structured U_R dictionaries',
                              nargs='+')

    parser_curves = subparsers.add_parser(
        'curves',
        parents=[output_options],
        help='tabulate the stimulus-response curves')
    parser_curves.add_argument('max_f',
                               help='largest frequency',
                               type=positive_int)

    options = parser.parse_args(args)
    if options.cmd == 'rank':
        if options.measure == 'generalized' and options.a is None:
            parser_rank.error('--a is required by the generalized measure')
        if options.measure != 'generalized' and options.a is not None:
            parser_rank.error('--a is only accepted by the generalized '
                              'measure')
        if options.measure != 'frequency' and options.min_freq is not None:
            parser_rank.error('--min-freq is only accepted by the frequency '
                              'measure')
    if options.cmd == 'analyze' and options.format == 'structured':
        parser_analyze.error('tables are only written as TSV')
    return options


def setup_logger(level: int) -> None:
    """Define the logging level.

    The root logger level is always set to :attr:`logging.INFO`. The provided
    level defines only the minimum level of the log messages emitted by
    this program, not its dependencies. Log messages go to standard error,
    leaving standard output for data.

    Args:
        level: the logger level
    """
    logging.basicConfig(
        level=logging.INFO,
        format="%(message)s",
        stream=sys.stderr,
    )
    structlog.configure(
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr))


def main(args: Sequence[str]) -> int:
    """Run the command-line interface.

    Args:
        args: command-line arguments (without the program name)

    Returns:
        the exit code
    """
    options = parse_args(args)
    setup_logger(logging.DEBUG if options.debug else
                 logging.WARNING if options.quiet else logging.INFO)
    log = structlog.get_logger(__name__)
    try:
        config = Config.read_settings(options.settings or DEFAULT_SETTINGS)
    except (TypeError, ConfigParserError) as e:
        log.error('invalid settings', error=str(e))
        return 1
    fmt = OutputFormat(options.format) if options.format \
        else config.output.format
    output = options.output

    if options.cmd == 'analyze':
        tokenizer = config.tokenizer
        changes = {
            k: v
            for k, v in [('hyphen_is_letter', options.hyphen_is_letter),
                         ('case_fold', options.case_fold),
                         ('extra_letter_chars', options.extra_letters)]
            if v is not None
        }
        try:
            tokenizer = replace(tokenizer, **changes)
        except TypeError as e:
            log.error('invalid tokenizer options', error=str(e))
            return 1
        return cmd_analyze(options.corpus, tokenizer, options.workers
                           or config.corpus.workers, output)
    if options.cmd == 'rank':
        measure = measure_from_name(options.measure, options.a)
        return cmd_rank(options.table, measure, options.top, options.min_freq,
                        output, fmt)
    if options.cmd == 'table-demo':
        return cmd_table_demo(output, fmt, options.counts)
    if options.cmd == 'compare':
        return cmd_compare(options.dictionary_a, options.dictionary_b,
                           options.top, output, fmt)
    if options.cmd == 'merge':
        return cmd_merge(options.inputs, output, fmt)
    if options.cmd == 'curves':
        return cmd_curves(options.max_f, output, fmt)
    raise RuntimeError  # should not happen


def run() -> None:
    """Run the command-line interface with the arguments of the process."""
    sys.exit(main(sys.argv[1:]))


__all__: Sequence[str] = [c.__name__ for c in [
    main,
    parse_args,
    run,
    setup_logger,
]]
