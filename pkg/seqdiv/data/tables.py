import re
from typing import *

import numpy as np
import pandas as pd

from ..errors import *

__all__ = [
    'RatingsTable', 'load_ratings', 'load_categories', 'load_features',
    'load_relevance', 'user_history_categories',
]


class RatingsTable(object):
    """
    ``(user, item, rating)`` triples, with the user and item vocabularies.

    Users and items are identified by strings; their integer indices follow
    the vocabulary order.
    """

    __slots__ = ('users', 'items', 'user_index', 'item_index', 'ratings')

    users: Tuple[str, ...]
    items: Tuple[str, ...]
    user_index: np.ndarray
    item_index: np.ndarray
    ratings: np.ndarray

    def __init__(self,
                 users: Sequence[str],
                 items: Sequence[str],
                 user_index: np.ndarray,
                 item_index: np.ndarray,
                 ratings: np.ndarray):
        self.users = tuple(users)
        self.items = tuple(items)
        self.user_index = np.asarray(user_index, dtype=np.int64)
        self.item_index = np.asarray(item_index, dtype=np.int64)
        self.ratings = np.asarray(ratings, dtype=np.float64)

    def __repr__(self):
        return (f'RatingsTable(n_users={self.n_users}, '
                f'n_items={self.n_items}, n_ratings={self.n_ratings})')

    def __len__(self):
        return self.n_ratings

    @property
    def n_users(self) -> int:
        return len(self.users)

    @property
    def n_items(self) -> int:
        return len(self.items)

    @property
    def n_ratings(self) -> int:
        return len(self.ratings)

    @property
    def density(self) -> float:
        """The fraction of observed ``(user, item)`` cells."""
        cells = self.n_users * self.n_items
        return self.n_ratings / cells if cells else 0.

    @property
    def rating_range(self) -> Tuple[float, float]:
        """The ``(min, max)`` of the observed ratings."""
        if not self.n_ratings:
            raise EmptyTable('The ratings table is empty.')
        return float(np.min(self.ratings)), float(np.max(self.ratings))

    @staticmethod
    def from_triples(triples: Iterable[Tuple[Hashable, Hashable, float]],
                     items: Optional[Sequence[Hashable]] = None
                     ) -> 'RatingsTable':
        """
        Build a table from ``(user, item, rating)`` triples, assigning ids in
        order of first appearance (`items`, if specified, come first).

        Raises:
            DuplicateRating: If a ``(user, item)`` pair appears twice.
        """
        frame = pd.DataFrame(list(triples), columns=['user', 'item', 'rating'])
        frame = frame.astype({'user': str, 'item': str, 'rating': np.float64})
        return _table_from_frame(frame, items=items, first_line=1)

    def subset(self, mask: np.ndarray) -> 'RatingsTable':
        """The triples selected by `mask`, with the same vocabularies."""
        return RatingsTable(self.users, self.items, self.user_index[mask],
                            self.item_index[mask], self.ratings[mask])

    def with_ratings(self, ratings: np.ndarray) -> 'RatingsTable':
        """The same triples with the rating values replaced by `ratings`."""
        ratings = np.asarray(ratings, dtype=np.float64)
        if ratings.shape != self.ratings.shape:
            raise DimensionMismatch(
                f'Expect {self.n_ratings} ratings: got shape '
                f'{ratings.shape!r}')
        return RatingsTable(self.users, self.items, self.user_index,
                            self.item_index, ratings)

    def user_items(self, user: int) -> np.ndarray:
        """Indices of the items rated by the `user`-th user."""
        return self.item_index[self.user_index == user]


def _table_from_frame(frame: pd.DataFrame,
                      items: Optional[Sequence[Hashable]],
                      first_line: int) -> RatingsTable:
    dup = frame.duplicated(['user', 'item'])
    if dup.any():
        pos = int(np.argmax(dup.values))
        raise DuplicateRating(frame['user'].iat[pos], frame['item'].iat[pos],
                              line=pos + first_line)

    users = pd.unique(frame['user'])
    head = [str(i) for i in items] if items is not None else []
    item_vocab = list(dict.fromkeys(head + list(pd.unique(frame['item']))))
    user_pos = {u: i for i, u in enumerate(users)}
    item_pos = {v: i for i, v in enumerate(item_vocab)}
    return RatingsTable(
        users=[str(u) for u in users],
        items=item_vocab,
        user_index=frame['user'].map(user_pos).values,
        item_index=frame['item'].map(item_pos).values,
        ratings=frame['rating'].values,
    )


def _read_csv(path: str,
              columns: Sequence[str],
              delimiter: str,
              exact: bool = True) -> pd.DataFrame:
    # all cells are read as text; the callers convert and validate them
    try:
        frame = pd.read_csv(path, sep=delimiter, dtype=str,
                            keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise ParseError(1, 'the file is empty') from None
    except pd.errors.ParserError as ex:
        m = re.search(r'line (\d+)', str(ex))
        raise ParseError(int(m.group(1)) if m else 0, str(ex)) from None

    frame.columns = [str(c).strip() for c in frame.columns]
    if exact and list(frame.columns) != list(columns):
        raise ParseError(1, f'the header must be `{delimiter.join(columns)}`: '
                            f'got `{delimiter.join(frame.columns)}`')
    if not exact and list(frame.columns[:len(columns)]) != list(columns):
        raise ParseError(1, f'the header must start with '
                            f'`{delimiter.join(columns)}`')
    for col in frame.columns:
        frame[col] = frame[col].str.strip()
        empty = frame[col] == ''
        if empty.any():
            raise ParseError(int(np.argmax(empty.values)) + 2,
                             f'empty `{col}` field')
    return frame


def _to_float(frame: pd.DataFrame, col: str) -> np.ndarray:
    values = pd.to_numeric(frame[col], errors='coerce').values.astype(
        np.float64)
    bad = ~np.isfinite(values)
    if np.any(bad):
        pos = int(np.argmax(bad))
        raise ParseError(pos + 2, f'`{col}` is not a finite number: '
                                  f'{frame[col].iat[pos]!r}')
    return values


def load_ratings(path: str,
                 delimiter: str = ',',
                 items: Optional[Sequence[str]] = None) -> RatingsTable:
    """
    Load a ``user,item,rating`` file.

    Args:
        path: The file path.
        delimiter: The field delimiter.
        items: Optional item vocabulary, placed before the items first
            appearing in the file (e.g., the items of the category file).

    Raises:
        ParseError: If the file is malformed, naming the line.
        DuplicateRating: If a ``(user, item)`` pair appears twice.
    """
    frame = _read_csv(path, ['user', 'item', 'rating'], delimiter)
    frame['rating'] = _to_float(frame, 'rating')
    return _table_from_frame(frame, items=items, first_line=2)


def load_categories(path: str,
                    delimiter: str = ','
                    ) -> Dict[str, FrozenSet[str]]:
    """
    Load an ``item,category`` file into per-item category sets, in order
    of first appearance of the items.
    """
    frame = _read_csv(path, ['item', 'category'], delimiter)
    ret: Dict[str, Set[str]] = {}
    for item, cat in zip(frame['item'], frame['category']):
        ret.setdefault(item, set()).add(cat)
    return {k: frozenset(v) for k, v in ret.items()}


def load_features(path: str, delimiter: str = ',') -> Dict[str, np.ndarray]:
    """Load an ``item,f0,f1,...`` file into per-item feature vectors."""
    frame = _read_csv(path, ['item'], delimiter, exact=False)
    if frame.shape[1] < 2:
        raise ParseError(1, 'at least one feature column is required')
    values = np.stack([_to_float(frame, c) for c in frame.columns[1:]],
                      axis=1)
    dup = frame['item'].duplicated()
    if dup.any():
        pos = int(np.argmax(dup.values))
        raise ParseError(pos + 2, f'duplicated item {frame["item"].iat[pos]!r}')
    return {item: values[i] for i, item in enumerate(frame['item'])}


def load_relevance(path: str,
                   delimiter: str = ','
                   ) -> Dict[str, Dict[str, float]]:
    """
    Load a ``query,doc,relevance`` file into per-query relevance scores of
    the judged documents, in order of first appearance.

    Raises:
        ParseError: If the file is malformed.
        DuplicateRating: If a ``(query, doc)`` pair appears twice.
    """
    frame = _read_csv(path, ['query', 'doc', 'relevance'], delimiter)
    relevance = _to_float(frame, 'relevance')
    dup = frame.duplicated(['query', 'doc'])
    if dup.any():
        pos = int(np.argmax(dup.values))
        raise DuplicateRating(frame['query'].iat[pos], frame['doc'].iat[pos],
                              line=pos + 2)
    ret: Dict[str, Dict[str, float]] = {}
    for q, d, r in zip(frame['query'], frame['doc'], relevance):
        ret.setdefault(q, {})[d] = float(r)
    return ret


def user_history_categories(table: RatingsTable,
                            categories: Sequence[AbstractSet[Hashable]],
                            user: int) -> FrozenSet[Hashable]:
    """
    The union of the categories of the items rated by the `user`-th user,
    where ``categories[i]`` belongs to the `i`-th item of `table`.
    """
    ret = set()
    for i in table.user_items(user):
        ret.update(categories[int(i)])
    return frozenset(ret)
