"""Treeshelf data model: binary increasing trees with explicit child slots.

A treeshelf of size n is a rooted tree carrying the labels 1..n exactly
once, in which every child hangs from its parent by an explicit left or
right link and labels strictly increase along every branch (so the root,
when present, is labeled 1).  The empty treeshelf has size 0 and is a
first-class value.  There are exactly n! treeshelves of size n; the
bijection with permutations of 1..n is implemented by
``shelf_to_permutation`` / ``permutation_to_shelf``.

Canonical text form, bit-exact under parse -> render:

    shelf := "" | node
    node  := LABEL [ "(" [node] "," [node] ")" ]

The parenthesis group is omitted for leaves; inside it the first slot is
the left child and the second the right child, either possibly empty.
Examples: ``1``, ``1(2,)``, ``1(,2)``, ``1(3(,5),2(4,6(,7)))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

#: Exhaustive enumeration above this size is refused unless the caller
#: raises the ceiling explicitly.  12! is already ~4.8e8 objects.
DEFAULT_SIZE_LIMIT = 12


class ShelfParseError(ValueError):
    """Malformed treeshelf text; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class ShelfValidationError(ValueError):
    """An operation received a structurally invalid treeshelf."""

    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = tuple(violations)


class EnumerationLimitError(RuntimeError):
    """Exhaustive enumeration requested above the guard ceiling."""


def check_size_limit(n: int, size_limit: int | None = None, what: str = "enumeration") -> None:
    """Reject exhaustive work on sizes past the configured ceiling."""
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    limit = DEFAULT_SIZE_LIMIT if size_limit is None else size_limit
    if n > limit:
        raise EnumerationLimitError(
            f"{what} at size {n} exceeds the ceiling {limit}; "
            f"pass size_limit explicitly to raise it"
        )


@dataclass(frozen=True, slots=True)
class Node:
    """One labeled node; children are explicit, either may be absent."""

    label: int
    left: Node | None = None
    right: Node | None = None


@dataclass(frozen=True, slots=True)
class Treeshelf:
    """A treeshelf value; ``Treeshelf()`` is the empty treeshelf."""

    root: Node | None = None

    @property
    def size(self) -> int:
        return sum(1 for _ in iter_nodes(self))

    @property
    def is_empty(self) -> bool:
        return self.root is None

    def __str__(self) -> str:
        return render_shelf(self)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[str, ...]


EMPTY_SHELF = Treeshelf()


def iter_nodes(t: Treeshelf) -> Iterator[Node]:
    """Yield every node of ``t`` (preorder)."""
    stack = [t.root] if t.root is not None else []
    while stack:
        nd = stack.pop()
        yield nd
        if nd.right is not None:
            stack.append(nd.right)
        if nd.left is not None:
            stack.append(nd.left)


def validate(t: Treeshelf) -> ValidationReport:
    """Check the treeshelf invariants on an arbitrary candidate tree.

    A valid size-n treeshelf has label set exactly {1..n}, no duplicate
    labels, and strictly increasing labels along every parent-to-child
    edge.  The report lists each violation found.
    """
    violations: list[str] = []
    labels: list[int] = []
    for nd in iter_nodes(t):
        if not isinstance(nd.label, int) or nd.label < 1:
            violations.append(f"label {nd.label!r} is not a positive integer")
            continue
        labels.append(nd.label)
        for child in (nd.left, nd.right):
            if child is not None and isinstance(child.label, int) and child.label <= nd.label:
                violations.append(f"non-increasing edge {nd.label} -> {child.label}")
    seen: set[int] = set()
    for x in labels:
        if x in seen:
            violations.append(f"duplicate label {x}")
        seen.add(x)
    n = len(labels)
    if seen != set(range(1, n + 1)) and not any("duplicate" in v or "positive" in v for v in violations):
        violations.append(f"label set {sorted(seen)} is not 1..{n}")
    return ValidationReport(valid=not violations, violations=tuple(violations))


def require_valid(t: Treeshelf) -> None:
    report = validate(t)
    if not report.valid:
        raise ShelfValidationError(report.violations)


# ── text form ────────────────────────────────────────────────────────────


def _render_node(nd: Node) -> str:
    if nd.left is None and nd.right is None:
        return str(nd.label)
    left = _render_node(nd.left) if nd.left is not None else ""
    right = _render_node(nd.right) if nd.right is not None else ""
    return f"{nd.label}({left},{right})"


def render_shelf(t: Treeshelf) -> str:
    """Canonical text form; the empty treeshelf renders as ''."""
    return "" if t.root is None else _render_node(t.root)


def _parse_node(text: str, pos: int) -> tuple[Node, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ShelfParseError("expected a label", pos)
    label = int(text[start:pos])
    if pos < len(text) and text[pos] == "(":
        pos += 1
        left = None
        if pos < len(text) and text[pos] != ",":
            left, pos = _parse_node(text, pos)
        if pos >= len(text) or text[pos] != ",":
            raise ShelfParseError("expected ','", pos)
        pos += 1
        right = None
        if pos < len(text) and text[pos] != ")":
            right, pos = _parse_node(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise ShelfParseError("expected ')'", pos)
        pos += 1
        return Node(label, left, right), pos
    return Node(label), pos


def parse_shelf(text: str) -> Treeshelf:
    """Parse the canonical text form; the result is validated."""
    text = text.strip()
    if not text:
        return EMPTY_SHELF
    node, pos = _parse_node(text, 0)
    if pos != len(text):
        raise ShelfParseError(f"trailing input {text[pos:]!r}", pos)
    t = Treeshelf(node)
    require_valid(t)
    return t


# ── permutation correspondence ───────────────────────────────────────────


def shelf_to_permutation(t: Treeshelf) -> tuple[int, ...]:
    """Map a size-n treeshelf to its permutation of 1..n.

    Node labeled v contributes the value n - v + 1, read off in in-order
    (left subtree, node, right subtree), so the root contributes the
    maximum n at the position splitting left from right.
    """
    require_valid(t)
    n = t.size
    out: list[int] = []

    def walk(nd: Node | None) -> None:
        if nd is None:
            return
        walk(nd.left)
        out.append(n - nd.label + 1)
        walk(nd.right)

    walk(t.root)
    return tuple(out)


def permutation_to_shelf(values: Sequence[int]) -> Treeshelf:
    """Inverse of ``shelf_to_permutation``.

    The maximum becomes the root (label 1 after complementing), the
    prefix builds the left subtree and the suffix the right subtree,
    recursively.
    """
    values = tuple(values)
    n = len(values)
    if sorted(values) != list(range(1, n + 1)):
        raise ValueError(f"{values!r} is not a permutation of 1..{n}")

    def build(seg: tuple[int, ...]) -> Node | None:
        if not seg:
            return None
        i = seg.index(max(seg))
        return Node(n - seg[i] + 1, build(seg[:i]), build(seg[i + 1:]))

    return Treeshelf(build(values))


# ── structural operations ────────────────────────────────────────────────


def _mirror_node(nd: Node | None) -> Node | None:
    if nd is None:
        return None
    return Node(nd.label, _mirror_node(nd.right), _mirror_node(nd.left))


def mirror(t: Treeshelf) -> Treeshelf:
    """Swap left and right recursively.  An involution on treeshelves."""
    return Treeshelf(_mirror_node(t.root))


def left_chain(labels: Sequence[int]) -> Node | None:
    """A chain of left links on the given labels, sorted ascending."""
    chain: Node | None = None
    for x in sorted(labels, reverse=True):
        chain = Node(x, chain, None)
    return chain


# ── exhaustive generation ────────────────────────────────────────────────


def _shelf_nodes(labels: tuple[int, ...]) -> Iterator[Node | None]:
    """All shelf structures over a fixed sorted label tuple.

    The smallest label is forced at the root; the remaining labels are
    split over every (left set, right set) pair.
    """
    if not labels:
        yield None
        return
    root, rest = labels[0], labels[1:]
    for k in range(len(rest) + 1):
        for left_labels in combinations(rest, k):
            chosen = set(left_labels)
            right_labels = tuple(x for x in rest if x not in chosen)
            lefts = list(_shelf_nodes(left_labels))
            for right in _shelf_nodes(right_labels):
                for left in lefts:
                    yield Node(root, left, right)


def enumerate_shelves(n: int, *, ordered: bool = True,
                      size_limit: int | None = None) -> Iterator[Treeshelf]:
    """Yield every treeshelf of size n exactly once.

    With ``ordered=True`` (the default) the stream is sorted
    lexicographically on the canonical text form, which materializes all
    n! objects first; ``ordered=False`` streams in recursive construction
    order.  Sizes above the ceiling (default 12) are refused.
    """
    check_size_limit(n, size_limit)

    def gen() -> Iterator[Treeshelf]:
        items = (Treeshelf(nd) for nd in _shelf_nodes(tuple(range(1, n + 1))))
        if ordered:
            yield from sorted(items, key=render_shelf)
        else:
            yield from items

    return gen()
