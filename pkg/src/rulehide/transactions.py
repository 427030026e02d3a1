"""Transaction database, basket-file I/O and support counting.

Items are interned as dense ids in lexicographic name order, so id order
and name order coincide and every itemset is a sorted tuple of ids.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from rulehide.errors import ContractError, ParseError
from rulehide.kernels import BitIndex

Itemset = tuple[int, ...]


def _check_token(token: str, line: int) -> None:
    if "#" in token or "->" in token:
        raise ParseError(f"malformed item token {token!r}", line)


class TransactionDB:
    """Ordered transactions over an interned item dictionary.

    ``tid`` values are 1-based positions and never change; deleting items
    can empty a transaction but never removes it.
    """

    def __init__(self, transactions: Iterable[Iterable[int]], items: Sequence[str]):
        self.items: tuple[str, ...] = tuple(items)
        self.ids: dict[str, int] = {name: i for i, name in enumerate(self.items)}
        if len(self.ids) != len(self.items):
            raise ContractError("duplicate item names in dictionary")
        self._rows: list[frozenset[int]] = [frozenset(t) for t in transactions]
        m = len(self.items)
        for tid, row in enumerate(self._rows, 1):
            for item in row:
                if not 0 <= item < m:
                    raise ContractError(f"transaction {tid} holds unknown item id {item}")
        self._index: BitIndex | None = None

    @classmethod
    def from_names(cls, transactions: Iterable[Iterable[str]],
                   items: Iterable[str] | None = None) -> "TransactionDB":
        """Build from item-name lists; the dictionary defaults to every name seen."""
        rows = [set(t) for t in transactions]
        names = set(items) if items is not None else set()
        if items is None:
            for row in rows:
                names |= row
        ordered = sorted(names)
        ids = {name: i for i, name in enumerate(ordered)}
        try:
            return cls(([ids[x] for x in row] for row in rows), ordered)
        except KeyError as exc:
            raise ContractError(f"item {exc.args[0]!r} not in dictionary") from None

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def m(self) -> int:
        return len(self.items)

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransactionDB):
            return NotImplemented
        return self.items == other.items and self._rows == other._rows

    def __repr__(self) -> str:
        return f"TransactionDB(n={self.n}, m={self.m})"

    def transaction(self, tid: int) -> Itemset:
        self._check_tid(tid)
        return tuple(sorted(self._rows[tid - 1]))

    def __iter__(self):
        for row in self._rows:
            yield tuple(sorted(row))

    def itemset(self, names: Iterable[str]) -> Itemset:
        """Canonical itemset for the given item names."""
        try:
            return tuple(sorted({self.ids[name] for name in names}))
        except KeyError as exc:
            raise ContractError(f"unknown item {exc.args[0]!r}") from None

    def names(self, itemset: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.items[i] for i in itemset)

    def total_items(self) -> int:
        return sum(len(row) for row in self._rows)

    def copy(self) -> "TransactionDB":
        new = TransactionDB.__new__(TransactionDB)
        new.items = self.items
        new.ids = self.ids
        new._rows = list(self._rows)
        new._index = self._index.copy() if self._index is not None else None
        return new

    # support counting

    @property
    def index(self) -> BitIndex:
        if self._index is None:
            self._index = BitIndex(self._rows, self.m)
        return self._index

    def _check_itemset(self, itemset: Sequence[int]) -> tuple[int, ...]:
        m = self.m
        for item in itemset:
            if not 0 <= item < m:
                raise ContractError(f"unknown item id {item}")
        return tuple(sorted(set(itemset)))

    def _check_tid(self, tid: int) -> None:
        if not 1 <= tid <= self.n:
            raise ContractError(f"tid {tid} out of range 1..{self.n}")

    def support_count(self, itemset: Sequence[int]) -> int:
        """Number of transactions containing every item of ``itemset``."""
        return self.index.count([self._check_itemset(itemset)])[0]

    def support_counts(self, itemsets: Sequence[Sequence[int]]) -> list[int]:
        return self.index.count([self._check_itemset(s) for s in itemsets])

    def supporting_tids(self, itemset: Sequence[int]) -> list[int]:
        """Ascending tids of the transactions containing ``itemset``."""
        return self.index.tids(self._check_itemset(itemset))

    def delete_item(self, tid: int, item: int) -> None:
        """Remove ``item`` from transaction ``tid`` in place.

        The item must be present; a no-op deletion is a caller bug.
        """
        self._check_tid(tid)
        row = self._rows[tid - 1]
        if item not in row:
            name = self.items[item] if 0 <= item < self.m else item
            raise ContractError(f"item {name!r} not in transaction {tid}")
        self._rows[tid - 1] = row - {item}
        if self._index is not None:
            self._index.discard(item, tid)


def parse_basket(text: str, items: Iterable[str] | None = None) -> TransactionDB:
    """Parse basket text: one transaction per non-comment line.

    ``items`` pins the dictionary (every token must belong to it); by
    default the dictionary is the set of tokens in the file.
    """
    rows = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, line in enumerate(lines, 1):
        if line.startswith("#"):
            continue
        tokens = line.split()
        for token in tokens:
            _check_token(token, lineno)
        rows.append((lineno, set(tokens)))
    if items is None:
        names: set[str] = set()
        for _, row in rows:
            names |= row
        dictionary = sorted(names)
    else:
        dictionary = sorted(set(items))
    ids = {name: i for i, name in enumerate(dictionary)}
    resolved = []
    for lineno, row in rows:
        try:
            resolved.append([ids[name] for name in row])
        except KeyError as exc:
            raise ParseError(f"item {exc.args[0]!r} not in dictionary", lineno) from None
    return TransactionDB(resolved, dictionary)


def serialize_basket(db: TransactionDB) -> str:
    return "".join(" ".join(db.names(t)) + "\n" for t in db)


def read_basket(path, items: Iterable[str] | None = None) -> TransactionDB:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_basket(fh.read(), items)
