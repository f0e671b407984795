"""Pattern occurrence counting and pattern-avoiding treeshelf generation.

A pattern is itself a small treeshelf shape; an occurrence in a treeshelf
is a rooted embedding at a node, so overlapping occurrences all count.
The eight supported patterns:

    left-edge     node with a left child
    right-edge    node with a right child
    ll            node -> left child -> left grandchild
    rr            node -> right child -> right grandchild
    l-then-r      node -> left child, which has a right child
    r-then-l      node -> right child, which has a left child
    siblings-inc  node with both children, left label < right label
    siblings-dec  node with both children, left label > right label

For each of l-then-r, ll and siblings-inc (and their mirror images) the
avoiders admit a direct recursive construction, exposed as
``generate_avoiders``; ``filter_avoiders`` is the brute-force oracle the
constructions are checked against.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Iterator

from .poly import PolyY
from .shelf import (
    Node,
    Treeshelf,
    check_size_limit,
    enumerate_shelves,
    iter_nodes,
    left_chain,
    mirror,
)


class PatternId(Enum):
    LEFT_EDGE = "left-edge"
    RIGHT_EDGE = "right-edge"
    LL = "ll"
    RR = "rr"
    L_THEN_R = "l-then-r"
    R_THEN_L = "r-then-l"
    SIBLINGS_INC = "siblings-inc"
    SIBLINGS_DEC = "siblings-dec"

    @classmethod
    def from_name(cls, name: str) -> PatternId:
        for p in cls:
            if p.value == name:
                return p
        raise ValueError(f"unknown pattern {name!r}; expected one of "
                         + ", ".join(p.value for p in cls))

    @property
    def size(self) -> int:
        return 2 if self in (PatternId.LEFT_EDGE, PatternId.RIGHT_EDGE) else 3

    @property
    def mirror_pattern(self) -> PatternId:
        return _MIRROR[self]


_MIRROR = {
    PatternId.LEFT_EDGE: PatternId.RIGHT_EDGE,
    PatternId.RIGHT_EDGE: PatternId.LEFT_EDGE,
    PatternId.LL: PatternId.RR,
    PatternId.RR: PatternId.LL,
    PatternId.L_THEN_R: PatternId.R_THEN_L,
    PatternId.R_THEN_L: PatternId.L_THEN_R,
    PatternId.SIBLINGS_INC: PatternId.SIBLINGS_DEC,
    PatternId.SIBLINGS_DEC: PatternId.SIBLINGS_INC,
}

#: Patterns whose avoiders have a direct recursive construction.
CONSTRUCTIVE_PATTERNS = (PatternId.L_THEN_R, PatternId.LL, PatternId.SIBLINGS_INC)


def _matches(nd: Node, p: PatternId) -> bool:
    l, r = nd.left, nd.right
    if p is PatternId.LEFT_EDGE:
        return l is not None
    if p is PatternId.RIGHT_EDGE:
        return r is not None
    if p is PatternId.LL:
        return l is not None and l.left is not None
    if p is PatternId.RR:
        return r is not None and r.right is not None
    if p is PatternId.L_THEN_R:
        return l is not None and l.right is not None
    if p is PatternId.R_THEN_L:
        return r is not None and r.left is not None
    if p is PatternId.SIBLINGS_INC:
        return l is not None and r is not None and l.label < r.label
    if p is PatternId.SIBLINGS_DEC:
        return l is not None and r is not None and l.label > r.label
    raise ValueError(f"unknown pattern {p!r}")


def count_occurrences(t: Treeshelf, p: PatternId) -> int:
    """Number of rooted embeddings of ``p`` in ``t`` (overlaps count)."""
    return sum(1 for nd in iter_nodes(t) if _matches(nd, p))


def pattern_profile(t: Treeshelf) -> dict[PatternId, int]:
    """Occurrence counts of all eight patterns in one traversal."""
    counts = dict.fromkeys(PatternId, 0)
    for nd in iter_nodes(t):
        l, r = nd.left, nd.right
        if l is not None:
            counts[PatternId.LEFT_EDGE] += 1
            if l.left is not None:
                counts[PatternId.LL] += 1
            if l.right is not None:
                counts[PatternId.L_THEN_R] += 1
        if r is not None:
            counts[PatternId.RIGHT_EDGE] += 1
            if r.right is not None:
                counts[PatternId.RR] += 1
            if r.left is not None:
                counts[PatternId.R_THEN_L] += 1
        if l is not None and r is not None:
            if l.label < r.label:
                counts[PatternId.SIBLINGS_INC] += 1
            elif l.label > r.label:
                counts[PatternId.SIBLINGS_DEC] += 1
    return counts


def avoids(t: Treeshelf, p: PatternId) -> bool:
    return count_occurrences(t, p) == 0


def filter_avoiders(n: int, p: PatternId, *, ordered: bool = True,
                    size_limit: int | None = None) -> Iterator[Treeshelf]:
    """Brute-force oracle: all size-n treeshelves filtered by avoidance."""
    return (t for t in enumerate_shelves(n, ordered=ordered, size_limit=size_limit)
            if avoids(t, p))


# ── direct constructions of the avoider classes ──────────────────────────
#
# All three follow the same labeled-product discipline: when a construction
# splits a label set between two components, the component written first
# receives the smallest label of the whole set, and each component is built
# on its own sublabels directly.


def _splits(rest: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    # every (A, B) with A + B = rest as sets, any sizes including empty
    for k in range(len(rest) + 1):
        for a in combinations(rest, k):
            chosen = set(a)
            yield a, tuple(x for x in rest if x not in chosen)


def _gen_l_then_r(labels: tuple[int, ...]) -> Iterator[Node | None]:
    # avoider = root with a pure left chain hanging on its left and an
    # avoider on its right; the chain takes the smallest label as root
    if not labels:
        yield None
        return
    root, rest = labels[0], labels[1:]
    for chain_labels, right_labels in _splits(rest):
        chain = left_chain(chain_labels)
        for r in _gen_l_then_r(right_labels):
            yield Node(root, chain, r)


def _gen_ll(labels: tuple[int, ...]) -> Iterator[Node | None]:
    # avoider = root without left child over an avoider, or such a piece
    # with a second root-without-left-child piece grafted as left subtree
    if not labels:
        yield None
        return
    root, rest = labels[0], labels[1:]
    for r in _gen_ll(rest):
        yield Node(root, None, r)
    for own, other in _splits(rest):
        if not other:
            continue
        # other is the left subtree: its root keeps no left child
        o_root, o_rest = other[0], other[1:]
        for o in _gen_ll(o_rest):
            piece = Node(o_root, None, o)
            for r in _gen_ll(own):
                yield Node(root, piece, r)


def _gen_siblings_inc(labels: tuple[int, ...]) -> Iterator[Node]:
    # nonempty avoiders; when the root has both children, the component
    # holding the smallest remaining label must sit on the right so the
    # left sibling label stays larger
    root, rest = labels[0], labels[1:]
    if not rest:
        yield Node(root)
        return
    for g in _gen_siblings_inc(rest):
        yield Node(root, g, None)
    for g in _gen_siblings_inc(rest):
        yield Node(root, None, g)
    anchor, others = rest[0], rest[1:]
    for extra, left_labels in _splits(others):
        if not left_labels:
            continue
        right_labels = (anchor,) + extra
        for gl in _gen_siblings_inc(left_labels):
            for gr in _gen_siblings_inc(right_labels):
                yield Node(root, gl, gr)


def generate_avoiders(n: int, p: PatternId, *,
                      size_limit: int | None = None) -> Iterator[Treeshelf]:
    """All size-n avoiders of ``p`` by direct construction, each once.

    Supported for l-then-r, ll, siblings-inc and their mirror images (the
    mirrored classes are produced by mirroring the base construction).
    """
    check_size_limit(n, size_limit)
    base = p
    mirrored = False
    if base not in CONSTRUCTIVE_PATTERNS:
        base = p.mirror_pattern
        mirrored = True
    if base not in CONSTRUCTIVE_PATTERNS:
        raise ValueError(f"no direct construction for pattern {p.value!r}")

    labels = tuple(range(1, n + 1))
    if base is PatternId.L_THEN_R:
        stream = _gen_l_then_r(labels)
    elif base is PatternId.LL:
        stream = _gen_ll(labels)
    else:
        stream = iter((None,)) if n == 0 else _gen_siblings_inc(labels)

    def gen() -> Iterator[Treeshelf]:
        for nd in stream:
            t = Treeshelf(nd)
            yield mirror(t) if mirrored else t

    return gen()


# ── exact statistics by enumeration ──────────────────────────────────────


def distribution_polynomial(n: int, p: PatternId | None = None, *,
                            size_limit: int | None = None) -> PolyY:
    """Left-child distribution over size-n avoiders of ``p``.

    Coefficient of y**k counts the avoiders with exactly k left children;
    ``p=None`` ranges over all size-n treeshelves.
    """
    check_size_limit(n, size_limit)
    hist = [0] * max(n, 1)
    for t in enumerate_shelves(n, ordered=False, size_limit=size_limit):
        if p is None or avoids(t, p):
            hist[count_occurrences(t, PatternId.LEFT_EDGE)] += 1
    return PolyY(hist)


def popularity(n: int, p: PatternId | None = None, *,
               size_limit: int | None = None) -> int:
    """Total number of left children across size-n avoiders of ``p``."""
    dist = distribution_polynomial(n, p, size_limit=size_limit)
    return sum(k * c for k, c in enumerate(dist.integer_coeffs()))


# ── bulk census used by the verification suites ──────────────────────────

_P_ORDER = tuple(PatternId)
_LE_IX = _P_ORDER.index(PatternId.LEFT_EDGE)
_ZERO8 = (0,) * 8


def _summaries(labels: tuple[int, ...]) -> Iterator[tuple[int, bool, bool, tuple[int, ...]]]:
    # (label, has_left, has_right, occurrence profile) per shelf structure;
    # profiles combine bottom-up so no tree objects are materialized
    root, rest = labels[0], labels[1:]
    if not rest:
        yield (root, False, False, _ZERO8)
        return
    for k in range(len(rest) + 1):
        for left_labels in combinations(rest, k):
            chosen = set(left_labels)
            right_labels = tuple(x for x in rest if x not in chosen)
            lefts = [None] if not left_labels else list(_summaries(left_labels))
            rights = [None] if not right_labels else list(_summaries(right_labels))
            for rs in rights:
                for ls in lefts:
                    lp = ls[3] if ls else _ZERO8
                    rp = rs[3] if rs else _ZERO8
                    profile = (
                        lp[0] + rp[0] + (1 if ls else 0),
                        lp[1] + rp[1] + (1 if rs else 0),
                        lp[2] + rp[2] + (1 if ls and ls[1] else 0),
                        lp[3] + rp[3] + (1 if rs and rs[2] else 0),
                        lp[4] + rp[4] + (1 if ls and ls[2] else 0),
                        lp[5] + rp[5] + (1 if rs and rs[1] else 0),
                        lp[6] + rp[6] + (1 if ls and rs and ls[0] < rs[0] else 0),
                        lp[7] + rp[7] + (1 if ls and rs and ls[0] > rs[0] else 0),
                    )
                    yield (root, ls is not None, rs is not None, profile)


class ShelfSurvey:
    """Occurrence census of all size-n treeshelves in a single pass.

    Collects, for every pattern, the left-child histogram of its avoiders,
    plus the unrestricted histogram.  Built on a compact structural
    enumeration; cross-checked against the object-level oracle in tests.
    """

    def __init__(self, n: int, *, size_limit: int | None = None):
        check_size_limit(n, size_limit)
        self.n = n
        width = max(n, 1)
        self.unrestricted_hist = [0] * width
        self.avoider_hist: dict[PatternId, list[int]] = {p: [0] * width for p in _P_ORDER}
        self.total = 0
        if n == 0:
            self.total = 1
            self.unrestricted_hist[0] = 1
            for p in _P_ORDER:
                self.avoider_hist[p][0] = 1
            return
        hists = [self.avoider_hist[p] for p in _P_ORDER]
        for _, _, _, profile in _summaries(tuple(range(1, n + 1))):
            le = profile[_LE_IX]
            self.total += 1
            self.unrestricted_hist[le] += 1
            for i in range(8):
                if not profile[i]:
                    hists[i][le] += 1

    def hist(self, p: PatternId | None) -> list[int]:
        return list(self.unrestricted_hist if p is None else self.avoider_hist[p])

    def count(self, p: PatternId | None) -> int:
        return sum(self.hist(p))

    def popularity(self, p: PatternId | None) -> int:
        return sum(k * c for k, c in enumerate(self.hist(p)))

    def distribution(self, p: PatternId | None) -> PolyY:
        return PolyY(self.hist(p))
