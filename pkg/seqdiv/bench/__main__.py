"""
Command line entry of the benchmark::

    python -m seqdiv.bench synth --out ./data/coat-like
    python -m seqdiv.bench run --ratings ./data/coat-like/ratings.csv \\
        --categories ./data/coat-like/categories.csv --regime medium \\
        --algorithms random,dum,mmr,msd,dpp,b2i --metrics osd,expnum
"""

import argparse
import sys
from typing import *

import mltk

from ..data import make_synthetic_dataset, write_dataset
from ..errors import *
from ..typing_ import *
from .config import *
from .runner import run_experiment

__all__ = ['make_parser', 'main']


# extra argparse options of the `run` flags, keyed by the config field
_RUN_OPTIONS = {
    'dataset_kind': {'choices': [k.value for k in DatasetKind]},
    'ratings': {'help': 'user,item,rating file'},
    'categories': {'help': 'item,category file'},
    'features': {'help': 'item,f0,f1,... file'},
    'relevance': {'help': 'query,doc,relevance file'},
    'regimes': {'flags': ('--regime', '--regimes'),
                'help': 'small, medium, large, full, or a comma list'},
    'watch_ratio': {'help': 'the ratings are watch ratios, normalize them '
                            'onto [1, 5]'},
    'mf_factors': {'help': 'default: 5, or 10 for large or dense tables'},
    'metrics': {'help': 'a comma list of ' + ', '.join(METRIC_NAMES)},
    'algorithms': {'help': 'a comma list of ' + ', '.join(ALGORITHM_NAMES)},
    'lambda_grid': {'help': 'start:stop:step, or a comma list'},
    'format': {'choices': [f.value for f in TableFormat]},
}


def _field_type(annotation):
    # `Optional[T]` -> `T`
    if getattr(annotation, '__origin__', None) is Union:
        args = [a for a in annotation.__args__ if a is not type(None)]
        if len(args) == 1:
            return args[0]
    return annotation


def _add_config_arguments(parser: argparse.ArgumentParser,
                          config_cls: Type[mltk.Config]):
    defaults = config_cls()
    for name, annotation in config_cls.__annotations__.items():
        options = dict(_RUN_OPTIONS.get(name, {}))
        flags = options.pop('flags', ('--' + name.replace('_', '-'),))
        field_type = _field_type(annotation)
        default = getattr(defaults, name)
        if field_type is bool:
            parser.add_argument(*flags, dest=name, action='store_true',
                                default=default, **options)
        else:
            parser.add_argument(*flags, dest=name, type=field_type,
                                default=default, **options)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='python -m seqdiv.bench',
        description='Sequential diversity ranking benchmark.')
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help='Run the benchmark.')
    _add_config_arguments(run, ExperimentConfig)

    synth = sub.add_parser(
        'synth', help='Write a synthetic dataset shaped like Coat.')
    synth.add_argument('--out', required=True)
    synth.add_argument('--users', type=int, default=290)
    synth.add_argument('--items', type=int, default=300)
    synth.add_argument('--ratings', type=int, default=6960)
    synth.add_argument('--categories', type=int, default=16)
    synth.add_argument('--seed', type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    values = dict(vars(args))
    command = values.pop('command')

    try:
        if command == 'synth':
            dataset = make_synthetic_dataset(
                n_users=args.users, n_items=args.items,
                n_ratings=args.ratings, n_categories=args.categories,
                seed=args.seed)
            paths = write_dataset(dataset, args.out)
            mltk.print_with_time(f'Dataset written: {", ".join(paths)}')
        else:
            report = run_experiment(ExperimentConfig(**values))
            mltk.print_with_time(f'{len(report.rows)} rows written to '
                                 f'{args.out}')
    except SeqDivError as ex:
        print(f'error: {ex}', file=sys.stderr)
        return 2
    return 0


if __name__ == '__main__':
    sys.exit(main())
