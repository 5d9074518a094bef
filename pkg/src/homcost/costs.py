"""Cost matrices, per-vertex color lists, and homomorphism values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import Digraph, _data_lines
from .errors import FormatError


class CostMatrix:
    """Positive integer costs c[u][i] for mapping source vertex u to color i."""

    __slots__ = ("rows", "n_source", "n_target")

    def __init__(self, rows: Iterable[Sequence[int]], n_target: int | None = None):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.n_source = len(self.rows)
        if self.rows:
            widths = {len(row) for row in self.rows}
            if len(widths) != 1:
                raise ValueError("cost matrix rows have inconsistent widths")
            inferred = widths.pop()
            if n_target is not None and n_target != inferred:
                raise ValueError(
                    f"cost matrix has {inferred} columns, expected {n_target}"
                )
            self.n_target = inferred
        else:
            self.n_target = 0 if n_target is None else n_target
        for u, row in enumerate(self.rows):
            for i, value in enumerate(row):
                if value < 1:
                    raise ValueError(
                        f"cost entry c[{u}][{i}] = {value} must be a positive integer"
                    )

    @classmethod
    def uniform(cls, n_source: int, n_target: int, value: int = 1) -> "CostMatrix":
        return cls([[value] * n_target for _ in range(n_source)], n_target=n_target)

    def max_entry(self, default: int = 0) -> int:
        return max((x for row in self.rows for x in row), default=default)

    def min_entry(self, default: int = 0) -> int:
        return min((x for row in self.rows for x in row), default=default)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CostMatrix)
            and self.rows == other.rows
            and self.n_target == other.n_target
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.n_target))

    def __repr__(self) -> str:
        return f"CostMatrix({list(map(list, self.rows))!r})"


class ListAssignment:
    """An admissible color set for every source vertex.

    Knows the target size so that membership can be validated up front.
    """

    __slots__ = ("n_target", "lists")

    def __init__(self, n_target: int, lists: Iterable[Iterable[int]]):
        self.n_target = n_target
        self.lists = tuple(frozenset(int(i) for i in lst) for lst in lists)
        for v, lst in enumerate(self.lists):
            for i in lst:
                if not (0 <= i < n_target):
                    raise ValueError(
                        f"list for vertex {v} names color {i}, outside 0..{n_target - 1}"
                    )

    @property
    def n_source(self) -> int:
        return len(self.lists)

    @classmethod
    def full(cls, n_source: int, n_target: int) -> "ListAssignment":
        return cls(n_target, [range(n_target)] * n_source)

    def sorted_list(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.lists[v]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ListAssignment)
            and self.n_target == other.n_target
            and self.lists == other.lists
        )

    def __hash__(self) -> int:
        return hash((self.n_target, self.lists))

    def __repr__(self) -> str:
        return f"ListAssignment({self.n_target}, {[sorted(l) for l in self.lists]!r})"


@dataclass(frozen=True)
class Homomorphism:
    """A total arc-preserving mapping together with its cost."""

    image: tuple[int, ...]
    cost: int


def hom_cost(image: Sequence[int], c: CostMatrix) -> int:
    return sum(c.rows[u][i] for u, i in enumerate(image))


def check_homomorphism(
    image: Sequence[int],
    d: Digraph,
    h: Digraph,
    c: CostMatrix | None = None,
    cost: int | None = None,
    lists: ListAssignment | None = None,
) -> None:
    """Raise ValueError unless `image` is a valid homomorphism of d to h.

    Optionally also checks the recorded cost against `c` and list membership.
    """
    if len(image) != d.n:
        raise ValueError(f"image has {len(image)} entries, expected {d.n}")
    for u, i in enumerate(image):
        if not (0 <= i < h.n):
            raise ValueError(f"vertex {u} maps to {i}, outside 0..{h.n - 1}")
    for u, v in sorted(d.arcs):
        if (image[u], image[v]) not in h.arcs:
            raise ValueError(
                f"arc ({u}, {v}) maps to ({image[u]}, {image[v]}), not an arc of the target"
            )
    if c is not None and cost is not None and hom_cost(image, c) != cost:
        raise ValueError(
            f"recorded cost {cost} differs from recomputed {hom_cost(image, c)}"
        )
    if lists is not None:
        for u, i in enumerate(image):
            if i not in lists.lists[u]:
                raise ValueError(f"vertex {u} maps to {i}, not in its list")


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def parse_costs(text: str, source: str | None = None) -> CostMatrix:
    """Rows of whitespace-separated positive integers; one row per source vertex."""
    rows = []
    width = None
    for lineno, line in _data_lines(text):
        fields = line.split()
        try:
            row = [int(f) for f in fields]
        except ValueError:
            raise FormatError(f"cost row must be integers, got {line!r}", lineno, source)
        if any(x < 1 for x in row):
            raise FormatError("cost entries must be positive", lineno, source)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise FormatError(
                f"cost row has {len(row)} entries, expected {width}", lineno, source
            )
        rows.append(row)
    return CostMatrix(rows)


def format_costs(c: CostMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in c.rows) + "\n"


def parse_lists(
    text: str, n_source: int, n_target: int, source: str | None = None
) -> ListAssignment:
    """One line per source vertex: space-separated color indices.

    A blank line is an empty list, so blank lines are data here and only
    "#" lines are skipped.  Exactly `n_source` data lines are required.
    """
    data: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            continue
        data.append((lineno, stripped))
    if len(data) != n_source:
        raise FormatError(
            f"expected {n_source} list lines, found {len(data)}", source=source
        )
    lists = []
    for lineno, line in data:
        try:
            entries = [int(f) for f in line.split()]
        except ValueError:
            raise FormatError(f"list line must be integers, got {line!r}", lineno, source)
        for i in entries:
            if not (0 <= i < n_target):
                raise FormatError(
                    f"color {i} out of range 0..{n_target - 1}", lineno, source
                )
        lists.append(entries)
    return ListAssignment(n_target, lists)


def format_lists(lists: ListAssignment) -> str:
    return (
        "\n".join(" ".join(str(i) for i in sorted(lst)) for lst in lists.lists) + "\n"
    )
