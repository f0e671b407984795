"""Bijections between pattern-avoiding treeshelves and classical objects.

Three correspondences, each with both directions and exhaustive
round-trip coverage in the tests:

* set partitions of {1..n}  <->  size-n treeshelves avoiding l-then-r
  (blocks become left chains threaded along the right spine);

* J-trees, i.e. unordered binary increasing trees whose only-children
  carry a left/right tag,  <->  size-n treeshelves avoiding siblings-inc
  (two-children nodes orient the smaller label to the right);

* unordered binary increasing trees on n+1 nodes  <->  size-n
  treeshelves avoiding ll, via the standard representation followed by a
  recursive shift, root deletion and label decrement.

Text forms: set partitions as ``1,3|2`` (blocks by ``|``, elements by
``,``, canonical order); unordered trees as ``1{2,3}``; J-trees the same
with tagged only-children written ``1[L:2]`` / ``1[R:2]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .patterns import PatternId, avoids
from .shelf import (
    Node,
    Treeshelf,
    check_size_limit,
    left_chain,
    require_valid,
)


# ── set partitions ────────────────────────────────────────────────────────


@dataclass(frozen=True)
class SetPartition:
    """Blocks stored canonically: elements ascending, blocks by minimum."""

    blocks: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]]) -> SetPartition:
        norm = tuple(sorted(tuple(sorted(b)) for b in blocks))
        flat = [x for b in norm for x in b]
        n = len(flat)
        if any(not b for b in norm):
            raise ValueError("empty block")
        if sorted(flat) != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition 1..{n}: {blocks!r}")
        return cls(norm)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return render_partition(self)


def render_partition(p: SetPartition) -> str:
    return "|".join(",".join(str(x) for x in b) for b in p.blocks)


def parse_partition(text: str) -> SetPartition:
    text = text.strip()
    if not text:
        return SetPartition()
    try:
        blocks = [[int(x) for x in part.split(",")] for part in text.split("|")]
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    return SetPartition.from_blocks(blocks)


def _require_canonical(p: SetPartition) -> None:
    if p != SetPartition.from_blocks(p.blocks):
        raise ValueError(f"partition {p.blocks!r} is not canonical")


def enumerate_partitions(n: int, *, size_limit: int | None = None) -> Iterator[SetPartition]:
    """Every canonical set partition of {1..n}; the empty partition at n=0."""
    check_size_limit(n, size_limit)

    def gen(k: int) -> Iterator[list[list[int]]]:
        if k == 0:
            yield []
            return
        for part in gen(k - 1):
            for i in range(len(part)):
                yield [b + [k] if j == i else b for j, b in enumerate(part)]
            yield part + [[k]]

    def out() -> Iterator[SetPartition]:
        for part in gen(n):
            # insertion builds blocks ordered by minimum with ascending
            # elements, so the canonical form needs no re-sorting
            yield SetPartition(tuple(tuple(b) for b in part))

    return out()


def partition_to_shelf(p: SetPartition) -> Treeshelf:
    """Block i contributes its minimum as the i-th right-spine node and
    the rest of the block as that node's left chain."""
    _require_canonical(p)

    def build(blocks: tuple[tuple[int, ...], ...]) -> Node | None:
        if not blocks:
            return None
        head = blocks[0]
        return Node(head[0], left_chain(head[1:]), build(blocks[1:]))

    return Treeshelf(build(p.blocks))


def shelf_to_partition(t: Treeshelf) -> SetPartition:
    """Read blocks off the right spine of an l-then-r avoider."""
    require_valid(t)
    if not avoids(t, PatternId.L_THEN_R):
        raise ValueError("treeshelf contains an l-then-r occurrence")
    blocks: list[tuple[int, ...]] = []
    spine = t.root
    while spine is not None:
        block = [spine.label]
        link = spine.left
        while link is not None:
            block.append(link.label)  # avoidance forces a pure left chain
            link = link.left
        blocks.append(tuple(sorted(block)))
        spine = spine.right
    return SetPartition(tuple(blocks))


# ── unordered increasing trees and J-trees ────────────────────────────────


@dataclass(frozen=True)
class UNode:
    """Unordered node: children kept sorted by label, at most two."""

    label: int
    children: tuple[UNode, ...] = ()


@dataclass(frozen=True)
class UnorderedTree:
    root: UNode | None = None

    @property
    def size(self) -> int:
        def count(nd: UNode) -> int:
            return 1 + sum(count(c) for c in nd.children)
        return 0 if self.root is None else count(self.root)

    def __str__(self) -> str:
        return render_unordered(self)


@dataclass(frozen=True)
class JNode:
    """J-tree node: ``kids`` holds (tag, child) pairs, tag 'L'/'R' on an
    only-child and None on each of two children."""

    label: int
    kids: tuple[tuple[str | None, JNode], ...] = ()


@dataclass(frozen=True)
class JTree:
    root: JNode | None = None

    @property
    def size(self) -> int:
        def count(nd: JNode) -> int:
            return 1 + sum(count(c) for _, c in nd.kids)
        return 0 if self.root is None else count(self.root)

    def __str__(self) -> str:
        return render_jtree(self)


def _unordered_violations(u: UnorderedTree) -> list[str]:
    out: list[str] = []
    labels: list[int] = []

    def walk(nd: UNode) -> None:
        labels.append(nd.label)
        if len(nd.children) > 2:
            out.append(f"node {nd.label} has {len(nd.children)} children")
        kid_labels = [c.label for c in nd.children]
        if kid_labels != sorted(kid_labels):
            out.append(f"children of {nd.label} not sorted")
        for c in nd.children:
            if c.label <= nd.label:
                out.append(f"non-increasing edge {nd.label} -> {c.label}")
            walk(c)

    if u.root is not None:
        walk(u.root)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        out.append(f"label set {sorted(labels)} is not 1..{len(labels)}")
    return out


def require_valid_unordered(u: UnorderedTree) -> None:
    problems = _unordered_violations(u)
    if problems:
        raise ValueError("; ".join(problems))


def require_valid_jtree(j: JTree) -> None:
    out: list[str] = []
    labels: list[int] = []

    def walk(nd: JNode) -> None:
        labels.append(nd.label)
        tags = [tag for tag, _ in nd.kids]
        if len(nd.kids) == 1 and tags[0] not in ("L", "R"):
            out.append(f"only-child of {nd.label} lacks a tag")
        if len(nd.kids) == 2:
            if tags != [None, None]:
                out.append(f"two-children node {nd.label} carries tags")
            if nd.kids[0][1].label >= nd.kids[1][1].label:
                out.append(f"children of {nd.label} not sorted")
        if len(nd.kids) > 2:
            out.append(f"node {nd.label} has {len(nd.kids)} children")
        for _, c in nd.kids:
            if c.label <= nd.label:
                out.append(f"non-increasing edge {nd.label} -> {c.label}")
            walk(c)

    if j.root is not None:
        walk(j.root)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        out.append(f"label set {sorted(labels)} is not 1..{len(labels)}")
    if out:
        raise ValueError("; ".join(out))


def _pair_splits(rest: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    # unordered pair of nonempty parts: the part holding min(rest) first
    anchor, others = rest[0], rest[1:]
    for k in range(len(others)):
        for extra in combinations(others, k):
            chosen = set(extra)
            yield (anchor,) + extra, tuple(x for x in others if x not in chosen)


def enumerate_unordered(n: int, *, size_limit: int | None = None) -> Iterator[UnorderedTree]:
    """Unordered binary increasing trees on n nodes, each exactly once."""
    check_size_limit(n, size_limit)

    def gen(labels: tuple[int, ...]) -> Iterator[UNode]:
        root, rest = labels[0], labels[1:]
        if not rest:
            yield UNode(root)
            return
        for c in gen(rest):
            yield UNode(root, (c,))
        for a_labels, b_labels in _pair_splits(rest):
            for a in gen(a_labels):
                for b in gen(b_labels):
                    yield UNode(root, (a, b))  # a.label < b.label by split

    def out() -> Iterator[UnorderedTree]:
        if n == 0:
            yield UnorderedTree()
            return
        for nd in gen(tuple(range(1, n + 1))):
            yield UnorderedTree(nd)

    return out()


def enumerate_jtrees(n: int, *, size_limit: int | None = None) -> Iterator[JTree]:
    """J-trees on n nodes: unordered shapes with tagged only-children."""
    check_size_limit(n, size_limit)

    def gen(labels: tuple[int, ...]) -> Iterator[JNode]:
        root, rest = labels[0], labels[1:]
        if not rest:
            yield JNode(root)
            return
        for c in gen(rest):
            yield JNode(root, (("L", c),))
            yield JNode(root, (("R", c),))
        for a_labels, b_labels in _pair_splits(rest):
            for a in gen(a_labels):
                for b in gen(b_labels):
                    yield JNode(root, ((None, a), (None, b)))

    def out() -> Iterator[JTree]:
        if n == 0:
            yield JTree()
            return
        for nd in gen(tuple(range(1, n + 1))):
            yield JTree(nd)

    return out()


# text forms


def render_unordered(u: UnorderedTree) -> str:
    def fmt(nd: UNode) -> str:
        if not nd.children:
            return str(nd.label)
        return f"{nd.label}{{{','.join(fmt(c) for c in nd.children)}}}"
    return "" if u.root is None else fmt(u.root)


def render_jtree(j: JTree) -> str:
    def fmt(nd: JNode) -> str:
        if not nd.kids:
            return str(nd.label)
        if len(nd.kids) == 1:
            tag, c = nd.kids[0]
            return f"{nd.label}[{tag}:{fmt(c)}]"
        return f"{nd.label}{{{fmt(nd.kids[0][1])},{fmt(nd.kids[1][1])}}}"
    return "" if j.root is None else fmt(j.root)


def _parse_label(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ValueError(f"expected a label at position {pos} in {text!r}")
    return int(text[start:pos]), pos


def parse_unordered(text: str) -> UnorderedTree:
    text = text.strip()
    if not text:
        return UnorderedTree()

    def node(pos: int) -> tuple[UNode, int]:
        label, pos = _parse_label(text, pos)
        children: list[UNode] = []
        if pos < len(text) and text[pos] == "{":
            pos += 1
            c, pos = node(pos)
            children.append(c)
            if pos < len(text) and text[pos] == ",":
                c, pos = node(pos + 1)
                children.append(c)
            if pos >= len(text) or text[pos] != "}":
                raise ValueError(f"expected '}}' at position {pos} in {text!r}")
            pos += 1
        return UNode(label, tuple(sorted(children, key=lambda c: c.label))), pos

    root, pos = node(0)
    if pos != len(text):
        raise ValueError(f"trailing input {text[pos:]!r}")
    u = UnorderedTree(root)
    require_valid_unordered(u)
    return u


def parse_jtree(text: str) -> JTree:
    text = text.strip()
    if not text:
        return JTree()

    def node(pos: int) -> tuple[JNode, int]:
        label, pos = _parse_label(text, pos)
        if pos < len(text) and text[pos] == "[":
            tag = text[pos + 1:pos + 2]
            if tag not in ("L", "R") or text[pos + 2:pos + 3] != ":":
                raise ValueError(f"expected '[L:' or '[R:' at position {pos} in {text!r}")
            c, pos = node(pos + 3)
            if text[pos:pos + 1] != "]":
                raise ValueError(f"expected ']' at position {pos} in {text!r}")
            return JNode(label, ((tag, c),)), pos + 1
        if pos < len(text) and text[pos] == "{":
            a, pos = node(pos + 1)
            if text[pos:pos + 1] != ",":
                raise ValueError(f"expected ',' at position {pos} in {text!r}")
            b, pos = node(pos + 1)
            if text[pos:pos + 1] != "}":
                raise ValueError(f"expected '}}' at position {pos} in {text!r}")
            a, b = sorted((a, b), key=lambda c: c.label)
            return JNode(label, ((None, a), (None, b))), pos + 1
        return JNode(label), pos

    root, pos = node(0)
    if pos != len(text):
        raise ValueError(f"trailing input {text[pos:]!r}")
    j = JTree(root)
    require_valid_jtree(j)
    return j


# ── J-trees <-> siblings-inc avoiders ─────────────────────────────────────


def jtree_to_shelf(j: JTree) -> Treeshelf:
    """Orient: two children send the smaller label right, the larger
    left; tagged only-children keep their side."""
    require_valid_jtree(j)

    def conv(nd: JNode) -> Node:
        if not nd.kids:
            return Node(nd.label)
        if len(nd.kids) == 1:
            tag, c = nd.kids[0]
            child = conv(c)
            return Node(nd.label, child, None) if tag == "L" else Node(nd.label, None, child)
        a, b = nd.kids[0][1], nd.kids[1][1]  # a.label < b.label
        return Node(nd.label, conv(b), conv(a))

    return Treeshelf(None if j.root is None else conv(j.root))


def shelf_to_jtree(t: Treeshelf) -> JTree:
    """Forget the orientation of sibling pairs, tag only-children."""
    require_valid(t)
    if not avoids(t, PatternId.SIBLINGS_INC):
        raise ValueError("treeshelf contains a siblings-inc occurrence")

    def conv(nd: Node) -> JNode:
        if nd.left is not None and nd.right is not None:
            a, b = conv(nd.right), conv(nd.left)  # right label < left label
            return JNode(nd.label, ((None, a), (None, b)))
        if nd.left is not None:
            return JNode(nd.label, (("L", conv(nd.left)),))
        if nd.right is not None:
            return JNode(nd.label, (("R", conv(nd.right)),))
        return JNode(nd.label)

    return JTree(None if t.root is None else conv(t.root))


# ── unordered trees <-> ll avoiders ───────────────────────────────────────


def standard_representation(u: UnorderedTree) -> Treeshelf:
    """Deterministic orientation of an unordered tree: an only-child goes
    right; of two children, the smaller label goes right."""
    require_valid_unordered(u)

    def conv(nd: UNode) -> Node:
        if not nd.children:
            return Node(nd.label)
        if len(nd.children) == 1:
            return Node(nd.label, None, conv(nd.children[0]))
        a, b = nd.children  # a.label < b.label
        return Node(nd.label, conv(b), conv(a))

    return Treeshelf(None if u.root is None else conv(u.root))


def shift(t: Treeshelf) -> Treeshelf:
    """Recursive shift: right subtree first, then the root's left child
    moves below the right child when that child has no left child and a
    smaller label, then the (possibly relocated) former left child's
    subtree is shifted in place."""
    require_valid(t)

    def sh(nd: Node | None) -> Node | None:
        if nd is None:
            return None
        r = sh(nd.right)
        l = nd.left
        if l is not None and r is not None and r.left is None and r.label < l.label:
            return Node(nd.label, None, Node(r.label, sh(l), r.right))
        return Node(nd.label, sh(l), r)

    return Treeshelf(sh(t.root))


def _unshift(nd: Node | None) -> Node | None:
    # inverse of the recursive shift, innermost relocations undone first
    if nd is None:
        return None
    z = nd.right
    if (z is not None and z.left is not None and nd.left is None
            and z.left.label > z.label):
        return Node(nd.label, _unshift(z.left), _unshift(Node(z.label, None, z.right)))
    return Node(nd.label, _unshift(nd.left), _unshift(z))


def _relabel(nd: Node | None, delta: int) -> Node | None:
    if nd is None:
        return None
    return Node(nd.label + delta, _relabel(nd.left, delta), _relabel(nd.right, delta))


def unordered_to_LL_avoider(u: UnorderedTree) -> Treeshelf:
    """Map an unordered tree on n+1 nodes to a size-n ll avoider:
    orient, shift, delete the root, decrement every label."""
    if u.root is None:
        raise ValueError("the unordered tree must be nonempty")
    shifted = shift(standard_representation(u))
    top = shifted.root
    assert top is not None
    if top.left is not None:
        raise RuntimeError("shift left a left child at the root")
    return Treeshelf(_relabel(top.right, -1))


def LL_avoider_to_unordered(t: Treeshelf) -> UnorderedTree:
    """Inverse direction: increment labels, hang the tree on a fresh root
    1 as its right subtree, undo the shift, and drop the orientation."""
    require_valid(t)
    if not avoids(t, PatternId.LL):
        raise ValueError("treeshelf contains an ll occurrence")
    rooted = Node(1, None, _relabel(t.root, +1))
    std = _unshift(rooted)

    def forget(nd: Node) -> UNode:
        if nd.left is not None and nd.right is None:
            raise RuntimeError("unshift produced a lone left child")
        if nd.left is not None and nd.right is not None and nd.left.label < nd.right.label:
            raise RuntimeError("unshift broke the orientation convention")
        kids = [forget(c) for c in (nd.left, nd.right) if c is not None]
        return UNode(nd.label, tuple(sorted(kids, key=lambda c: c.label)))

    return UnorderedTree(forget(std))
