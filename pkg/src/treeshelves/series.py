"""Exact exponential-generating-function tables and class recurrences.

A table here is a list whose entry n stores n! * [z^n] F(z); with that
normalization multiplication of EGFs is the binomial convolution

    (F*G)_n = sum_k C(n, k) F_k G_{n-k}

and integration/differentiation in z are plain index shifts.  Entries are
exact rationals, or polynomials in a marking variable y for the bivariate
class series below.

The four pattern classes tracked bivariately (y marks left children):

    unrestricted    b0 = 0,  b_{n+1} = [n=0] + (1+y) b_n + y (b*b)_n
    l-then-r        c0 = 1,  c_{n+1} = sum_k C(n,k) y^k c_{n-k}
    ll              e0 = 1,  e_{n+1} = e_n + y (e * I)_n with I_n = e_{n-1}
    siblings-inc    g0 = 0,  g_{n+1} = [n=0] + (1+y) g_n + y h_n,
                             h_{n+1} = sum_k C(n,k) g_{k+1} g_{n-k}

Each returned table covers the full class including the empty treeshelf,
so entry 0 is 1 and the values at y=1 reproduce the class counting
sequences (factorials, Bell, a shifted Euler sequence, and the sequence
1,1,2,5,16,64,308,... respectively).  All coefficients are checked to be
nonnegative integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .patterns import PatternId
from .poly import PolyY

DEFAULT_ORDER = 40

SERIES_CLASSES = (None, PatternId.L_THEN_R, PatternId.LL, PatternId.SIBLINGS_INC)


# ── generic table operations (scalar entries) ─────────────────────────────


def egf_add(f: Sequence, g: Sequence) -> list:
    if len(f) != len(g):
        raise ValueError("tables must share a truncation order")
    return [a + b for a, b in zip(f, g)]


def egf_mul(f: Sequence, g: Sequence) -> list:
    """Binomial convolution; works for rational or polynomial entries."""
    if len(f) != len(g):
        raise ValueError("tables must share a truncation order")
    return [sum(comb(n, k) * (f[k] * g[n - k]) for k in range(n + 1))
            for n in range(len(f))]


def egf_integrate(f: Sequence) -> list:
    """Antiderivative with constant 0: entries shift up one index."""
    if not f:
        return []
    zero = f[0] * 0
    return [zero] + list(f[:-1])


def egf_differentiate(f: Sequence) -> list:
    """Derivative in z: entries shift down one index (order drops by 1)."""
    return list(f[1:])


def egf_exp(a: Sequence[Fraction | int]) -> list[Fraction]:
    """exp of a table with constant term 0, via B' = A'B."""
    if not a:
        return []
    if a[0] != 0:
        raise ValueError("egf_exp requires constant term 0")
    b = [Fraction(1)]
    for n in range(len(a) - 1):
        b.append(sum(comb(n, k) * a[k + 1] * b[n - k] for k in range(n + 1)))
    return b


def egf_reciprocal(f: Sequence[Fraction | int]) -> list[Fraction]:
    """Table of 1/F for F with nonzero constant term."""
    if not f or f[0] == 0:
        raise ValueError("egf_reciprocal requires a nonzero constant term")
    c = Fraction(1, 1) / f[0]
    g = [c]
    for n in range(1, len(f)):
        g.append(-c * sum(comb(n, k) * f[k] * g[n - k] for k in range(1, n + 1)))
    return g


# ── stock tables ──────────────────────────────────────────────────────────


def exp_z_table(n_max: int) -> list[Fraction]:
    return [Fraction(1)] * (n_max + 1)


def sin_z_table(n_max: int) -> list[Fraction]:
    cycle = (0, 1, 0, -1)
    return [Fraction(cycle[n % 4]) for n in range(n_max + 1)]


# ── bivariate class series ────────────────────────────────────────────────


def _check_integral(table: list[PolyY]) -> list[PolyY]:
    for n, entry in enumerate(table):
        coeffs = entry.integer_coeffs()  # raises on a non-integer
        if any(c < 0 for c in coeffs):
            raise ValueError(f"negative coefficient in entry {n}")
    return table


def distribution_series(p: PatternId | None = None,
                        n_max: int = DEFAULT_ORDER) -> list[PolyY]:
    """Left-child distribution table of a pattern class up to order n_max.

    Entry n is the polynomial whose y^k coefficient counts the size-n
    members of the class with exactly k left children.  ``p=None`` is the
    unrestricted class; the other supported classes are l-then-r, ll and
    siblings-inc.
    """
    one, y = PolyY.one(), PolyY.y()
    if p is None:
        b = [PolyY.zero()]
        for n in range(n_max):
            conv = sum((comb(n, k) * (b[k] * b[n - k]) for k in range(n + 1)),
                       PolyY.zero())
            b.append((one if n == 0 else PolyY.zero())
                     + (one + y) * b[n] + y * conv)
        b[0] = one
        return _check_integral(b)
    if p is PatternId.L_THEN_R:
        c = [one]
        for n in range(n_max):
            c.append(sum((comb(n, k) * c[n - k].shift(k) for k in range(n + 1)),
                         PolyY.zero()))
        return _check_integral(c)
    if p is PatternId.LL:
        e = [one]
        for n in range(n_max):
            conv = sum((comb(n, k) * (e[k] * (e[n - k - 1] if n - k >= 1 else PolyY.zero()))
                        for k in range(n + 1)), PolyY.zero())
            e.append(e[n] + y * conv)
        return _check_integral(e)
    if p is PatternId.SIBLINGS_INC:
        g = [PolyY.zero()]
        h = [PolyY.zero()]
        for n in range(n_max):
            g.append((one if n == 0 else PolyY.zero()) + (one + y) * g[n] + y * h[n])
            h.append(sum((comb(n, k) * (g[k + 1] * g[n - k]) for k in range(n + 1)),
                         PolyY.zero()))
        g[0] = one
        return _check_integral(g)
    raise ValueError(f"no distribution series for pattern {p.value!r}; "
                     "supported classes: unrestricted, l-then-r, ll, siblings-inc")


def mirror_distribution_table(table: Sequence[PolyY]) -> list[PolyY]:
    """Left-child table of the mirrored class: reverse each size-n row
    within degrees 0..n-1 (a size-n member has n-1 child links total)."""
    return [row.reflect(max(n - 1, 0)) for n, row in enumerate(table)]


# ── counting sequences (values at y = 1) ──────────────────────────────────


def series_counts(p: PatternId | None = None, n_max: int = DEFAULT_ORDER) -> list[int]:
    """Class counting sequence from the distribution recurrences at y=1."""
    if p is None:
        return [factorial(n) for n in range(n_max + 1)]
    if p is PatternId.L_THEN_R:
        v = [1]
        for n in range(n_max):
            v.append(sum(comb(n, k) * v[n - k] for k in range(n + 1)))
        return v
    if p is PatternId.LL:
        v = [1]
        for n in range(n_max):
            v.append(v[n] + sum(comb(n, k) * v[k] * v[n - k - 1]
                                for k in range(n)))
        return v
    if p is PatternId.SIBLINGS_INC:
        g = [0]
        h = [0]
        for n in range(n_max):
            g.append((1 if n == 0 else 0) + 2 * g[n] + h[n])
            h.append(sum(comb(n, k) * g[k + 1] * g[n - k] for k in range(n + 1)))
        g[0] = 1
        return g
    raise ValueError(f"no counting series for pattern {p.value!r}")


# ── big-integer routes to the classical sequences ─────────────────────────


def bell_numbers(n_max: int) -> list[int]:
    """Bell numbers by the additive triangle; suited to large n."""
    row = [1]
    bells = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        bells.append(row[0])
    return bells


def euler_numbers(n_max: int) -> list[int]:
    """Entries n! [z^n] 1/(1 - sin z) by the boustrophedon triangle.

    These are the up/down (zigzag) numbers shifted by one position.
    """
    row = [1]
    zig = [1]
    for n in range(1, n_max + 2):
        nxt = [0]
        for k in range(1, n + 1):
            nxt.append(nxt[k - 1] + row[n - k])
        row = nxt
        zig.append(row[n])
    return zig[1:n_max + 2]


def lah_number(n: int) -> int:
    """n! (n-1) / 2 for n >= 1; the left-child popularity of the
    unrestricted class."""
    return 0 if n == 0 else factorial(n) * (n - 1) // 2


# ── popularity sequences ──────────────────────────────────────────────────
#
# Popularity is the y-derivative of a class table at y=1.  The recurrences
# below propagate (value, derivative) pairs at y=1 directly, which keeps
# everything in big integers and scales to n in the hundreds.  Where a
# closed form exists the result is recomputed independently and compared.


def _popularity_unrestricted(n_max: int) -> list[int]:
    v = [0] * (n_max + 2)
    d = [0] * (n_max + 2)
    for n in range(n_max + 1):
        conv = sum(comb(n, k) * v[k] * v[n - k] for k in range(n + 1))
        dconv = sum(comb(n, k) * (d[k] * v[n - k] + v[k] * d[n - k])
                    for k in range(n + 1))
        v[n + 1] = (1 if n == 0 else 0) + 2 * v[n] + conv
        d[n + 1] = v[n] + 2 * d[n] + conv + dconv
    return d[:n_max + 1]


def _popularity_l_then_r(n_max: int) -> list[int]:
    v = [1] + [0] * (n_max + 1)
    d = [0] * (n_max + 2)
    for n in range(n_max + 1):
        v[n + 1] = sum(comb(n, k) * v[n - k] for k in range(n + 1))
        d[n + 1] = sum(comb(n, k) * (k * v[n - k] + d[n - k]) for k in range(n + 1))
    return d[:n_max + 1]


def _popularity_ll(n_max: int) -> list[int]:
    v = [1] + [0] * (n_max + 1)
    d = [0] * (n_max + 2)
    for n in range(n_max + 1):
        conv = sum(comb(n, k) * v[k] * v[n - k - 1] for k in range(n))
        dconv = sum(comb(n, k) * (d[k] * v[n - k - 1] + v[k] * d[n - k - 1])
                    for k in range(n))
        v[n + 1] = v[n] + conv
        d[n + 1] = d[n] + conv + dconv
    return d[:n_max + 1]


def _popularity_siblings_inc(n_max: int) -> list[int]:
    vg = [0] * (n_max + 2)
    dg = [0] * (n_max + 2)
    vh = [0] * (n_max + 2)
    dh = [0] * (n_max + 2)
    for n in range(n_max + 1):
        vg[n + 1] = (1 if n == 0 else 0) + 2 * vg[n] + vh[n]
        dg[n + 1] = vg[n] + 2 * dg[n] + vh[n] + dh[n]
        vh[n + 1] = sum(comb(n, k) * vg[k + 1] * vg[n - k] for k in range(n + 1))
        dh[n + 1] = sum(comb(n, k) * (dg[k + 1] * vg[n - k] + vg[k + 1] * dg[n - k])
                        for k in range(n + 1))
    return dg[:n_max + 1]


def popularity_series(p: PatternId | None = None,
                      n_max: int = DEFAULT_ORDER) -> list[int]:
    """Total left children over the size-n class members, for n <= n_max.

    For the unrestricted class the result is checked against n!(n-1)/2;
    for l-then-r against (n+1) b_n - b_{n+1} on Bell numbers; for ll
    against (n+1) e_n - e_{n+1} on the shifted zigzag numbers.
    """
    if p is None:
        d = _popularity_unrestricted(n_max)
        for n, val in enumerate(d):
            if val != lah_number(n):
                raise ArithmeticError(f"popularity mismatch at n={n}: {val} != n!(n-1)/2")
        return d
    if p is PatternId.L_THEN_R:
        d = _popularity_l_then_r(n_max)
        b = bell_numbers(n_max + 1)
        for n, val in enumerate(d):
            if val != (n + 1) * b[n] - b[n + 1]:
                raise ArithmeticError(f"popularity mismatch at n={n} for l-then-r")
        return d
    if p is PatternId.LL:
        d = _popularity_ll(n_max)
        e = euler_numbers(n_max + 1)
        for n, val in enumerate(d):
            if val != (n + 1) * e[n] - e[n + 1]:
                raise ArithmeticError(f"popularity mismatch at n={n} for ll")
        return d
    if p is PatternId.SIBLINGS_INC:
        return _popularity_siblings_inc(n_max)
    raise ValueError(f"no popularity series for pattern {p.value!r}")


def mirror_popularity_series(p: PatternId | None, n_max: int) -> list[int]:
    """Right-child popularity of a class equals (n-1)*count - left
    popularity, since each size-n member has n-1 child links."""
    counts = series_counts(p, n_max)
    pops = popularity_series(p, n_max)
    return [0 if n == 0 else (n - 1) * counts[n] - pops[n] for n in range(n_max + 1)]


# ── named sequences ───────────────────────────────────────────────────────


def named_sequence(seq_id: str, n_max: int = DEFAULT_ORDER) -> list[int]:
    """Classical sequences the class series reproduce.

    ``bell``         exp(e^z - 1) via egf_exp
    ``euler``        1/(1 - sin z) via egf_reciprocal
    ``a131178``      siblings-inc class counts
    ``eulerian_row`` coefficients of the unrestricted entry n_max
    ``lah``          n!(n-1)/2, zero at n=0
    """
    if seq_id == "bell":
        a = [Fraction(0)] + [Fraction(1)] * n_max  # e^z - 1
        return [int(x) for x in egf_exp(a)]
    if seq_id == "euler":
        sin = sin_z_table(n_max)
        one_minus_sin = [Fraction(1)] + [-s for s in sin[1:]]
        vals = egf_reciprocal(one_minus_sin)
        out = []
        for x in vals:
            if x.denominator != 1:
                raise ArithmeticError("euler entries must be integers")
            out.append(x.numerator)
        return out
    if seq_id == "a131178":
        return series_counts(PatternId.SIBLINGS_INC, n_max)
    if seq_id == "eulerian_row":
        row = distribution_series(None, n_max)[n_max]
        return list(row.integer_coeffs())
    if seq_id == "lah":
        return [lah_number(n) for n in range(n_max + 1)]
    raise ValueError(f"unknown sequence id {seq_id!r}")
