from typing import *

import mltk

__all__ = ['print_experiment_summary', 'print_results_summary']


def print_experiment_summary(config: mltk.Config,
                             datasets: Sequence[Tuple[str, int, int, float]],
                             printer: Optional[Callable[[str], Any]] = print):
    """
    Print the experiment configuration, and the size of each dataset.

    Args:
        config: The experiment configuration.
        datasets: ``(name, n_instances, n_items, avg_distance)`` tuples.
        printer: The line printer.
    """
    # the config
    mltk.print_config(config, print_func=printer)
    printer('')

    # the dataset info
    data_info = []
    for name, n_instances, n_items, avg_dist in datasets:
        data_info.append(
            (name, f'{n_instances:,d} instances, {n_items:,d} items, '
                   f'avg(dist) {avg_dist:.4f}'))
    if data_info:
        printer(mltk.format_key_values(data_info, 'Datasets'))
        printer('')


def print_results_summary(
        aggregates: Sequence[Mapping[str, Any]],
        printer: Optional[Callable[[str], Any]] = print
):
    """Print ``mean +/- std`` of each (regime, algorithm, metric) triple."""
    names = []
    values = []
    max_value_len = 0
    for row in aggregates:
        names.append(f'{row["regime"]}/{row["algorithm"]}/{row["metric"]}')
        values.append(f'{row["mean"]:.4f} ± {row["std"]:.4f}')
        max_value_len = max(max_value_len, len(values[-1]))

    info = [(name, f'{value:>{max_value_len}s}')
            for name, value in zip(names, values)]
    if info:
        printer(mltk.format_key_values(info, title='Results', formatter=str))
        printer('')
