import os
from typing import *

import numpy as np
import pandas as pd

from .tables import RatingsTable

__all__ = ['SyntheticDataset', 'make_synthetic_dataset', 'write_dataset']


class SyntheticDataset(NamedTuple):
    ratings: RatingsTable
    categories: Dict[str, FrozenSet[str]]
    """Per-item category sets, keyed by item id, in item order."""


def make_synthetic_dataset(n_users: int = 290,
                           n_items: int = 300,
                           n_ratings: int = 6960,
                           n_categories: int = 16,
                           max_item_categories: int = 3,
                           factors: int = 3,
                           seed: int = 0) -> SyntheticDataset:
    """
    Generate a rating dataset shaped like the Coat shopping data: every user
    rates the same number of items (up to one more, if `n_ratings` is not a
    multiple of `n_users`), on the integer scale 1 to 5, and every item has
    1 to `max_item_categories` categories.

    Ratings come from planted low-rank preferences plus noise.
    """
    rng = np.random.default_rng(seed)
    users = [f'u{u}' for u in range(n_users)]
    items = [f'i{i}' for i in range(n_items)]

    cats = {}
    for i, item in enumerate(items):
        size = int(rng.integers(1, max_item_categories + 1))
        picked = rng.choice(n_categories, size=size, replace=False)
        cats[item] = frozenset(f'c{c}' for c in sorted(picked))

    user_f = rng.normal(size=[n_users, factors])
    item_f = rng.normal(size=[n_items, factors])
    scores = user_f @ item_f.T / np.sqrt(factors) + \
        0.3 * rng.normal(size=[n_users, n_items])
    scores = np.clip(np.round(3. + scores), 1., 5.)

    per_user = np.full([n_users], n_ratings // n_users)
    per_user[:n_ratings % n_users] += 1
    user_index, item_index = [], []
    for u in range(n_users):
        rated = np.sort(rng.choice(n_items, size=int(per_user[u]),
                                   replace=False))
        user_index.append(np.full([len(rated)], u))
        item_index.append(rated)
    user_index = np.concatenate(user_index)
    item_index = np.concatenate(item_index)

    table = RatingsTable(users=users, items=items, user_index=user_index,
                         item_index=item_index,
                         ratings=scores[user_index, item_index])
    return SyntheticDataset(ratings=table, categories=cats)


def write_dataset(dataset: SyntheticDataset, out_dir: str) -> Tuple[str, str]:
    """
    Write ``ratings.csv`` and ``categories.csv`` into `out_dir`.

    Returns:
        The paths of the two files.
    """
    os.makedirs(out_dir, exist_ok=True)
    table = dataset.ratings
    ratings_path = os.path.join(out_dir, 'ratings.csv')
    categories_path = os.path.join(out_dir, 'categories.csv')

    pd.DataFrame({
        'user': [table.users[u] for u in table.user_index],
        'item': [table.items[i] for i in table.item_index],
        'rating': table.ratings,
    }).to_csv(ratings_path, index=False)
    pd.DataFrame(
        [(item, c) for item, cs in dataset.categories.items()
         for c in sorted(cs)],
        columns=['item', 'category'],
    ).to_csv(categories_path, index=False)
    return ratings_path, categories_path
