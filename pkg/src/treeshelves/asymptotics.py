"""Growth estimates for the popularity sequences, compared in log space.

The left-child popularity of the three constructive classes grows like

    l-then-r       sqrt(n) (n/W(n))^(n+1/2) e^(n/W(n) - n - 1)
    ll             n! * 8(pi-2)/pi^3 * n^2 (2/pi)^n
    siblings-inc   n! * n (sqrt(2)/log(2 sqrt(2) + 3))^(n+1)

with W the principal Lambert function.  Estimates are evaluated as
logarithms so sizes in the hundreds stay finite; exact values come from
the big-integer recurrences and are compared via log ratios.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

from .patterns import PatternId
from .series import bell_numbers, euler_numbers, popularity_series

ASYMPTOTIC_CLASSES = (PatternId.L_THEN_R, PatternId.LL, PatternId.SIBLINGS_INC)


def lambert_w(x: float) -> float:
    """Principal branch W(x) for x >= 0, damped Newton from log(1+x).

    The step is evaluated as (w - x e^-w)/(1 + w), which cannot overflow,
    and is halved whenever it fails to shrink the residual.
    """
    if x < 0:
        raise ValueError("lambert_w is restricted to x >= 0")
    if x == 0.0:
        return 0.0
    w = math.log1p(x)
    resid = abs(w - x * math.exp(-w))
    for _ in range(200):
        delta = (w - x * math.exp(-w)) / (1.0 + w)
        while True:
            cand = w - delta
            cand_resid = abs(cand - x * math.exp(-cand))
            if cand_resid <= resid or abs(delta) < 1e-18 * (1.0 + abs(w)):
                break
            delta *= 0.5
        if cand == w:
            break
        w, resid = cand, cand_resid
        if abs(delta) <= 1e-16 * (1.0 + abs(w)):
            break
    return w


def asymptotic_log_popularity(p: PatternId, n: int) -> float:
    """Natural log of the popularity estimate at size n (n >= 2)."""
    if n < 2:
        raise ValueError("estimates are defined for n >= 2")
    if p is PatternId.L_THEN_R:
        w = lambert_w(float(n))
        return (0.5 * math.log(n) + (n + 0.5) * (math.log(n) - math.log(w))
                + n / w - n - 1.0)
    if p is PatternId.LL:
        return (math.lgamma(n + 1) + math.log(8.0 * (math.pi - 2.0) / math.pi ** 3)
                + 2.0 * math.log(n) + n * math.log(2.0 / math.pi))
    if p is PatternId.SIBLINGS_INC:
        growth = math.sqrt(2.0) / math.log(2.0 * math.sqrt(2.0) + 3.0)
        return math.lgamma(n + 1) + math.log(n) + (n + 1) * math.log(growth)
    raise ValueError(f"no asymptotic estimate for pattern {p.value!r}")


def asymptotic_popularity(p: PatternId, n: int) -> tuple[float, float | None]:
    """(log estimate, estimate) pair; the plain value is None when it
    would overflow a double."""
    log_value = asymptotic_log_popularity(p, n)
    value = math.exp(log_value) if log_value < 700.0 else None
    return log_value, value


def exact_popularity_values(p: PatternId, n_max: int) -> list[int]:
    """Exact popularity by the route suited to large sizes."""
    if p is PatternId.L_THEN_R:
        b = bell_numbers(n_max + 1)
        return [(n + 1) * b[n] - b[n + 1] for n in range(n_max + 1)]
    if p is PatternId.LL:
        e = euler_numbers(n_max + 1)
        return [(n + 1) * e[n] - e[n + 1] for n in range(n_max + 1)]
    if p is PatternId.SIBLINGS_INC:
        return popularity_series(PatternId.SIBLINGS_INC, n_max)
    raise ValueError(f"no exact popularity route for pattern {p.value!r}")


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    exact: str             # decimal string, may be hundreds of digits
    estimate: float | None
    estimate_log: float
    exact_log: float
    log_ratio: float       # ln(exact) - ln(estimate)


@dataclass(frozen=True)
class AsymptoticReport:
    class_id: str
    rows: tuple[AsymptoticRow, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "exact", "estimate_log", "exact_log", "log_ratio"])
        for r in self.rows:
            writer.writerow([r.n, r.exact, repr(r.estimate_log),
                             repr(r.exact_log), repr(r.log_ratio)])
        return buf.getvalue()


def ratio_report(p: PatternId, n_values: Sequence[int]) -> AsymptoticReport:
    """Exact-versus-estimate comparison at the requested sizes."""
    ns = sorted(set(n_values))
    if not ns or ns[0] < 2:
        raise ValueError("sizes must all be >= 2")
    exact = exact_popularity_values(p, ns[-1])
    rows = []
    for n in ns:
        value = exact[n]
        exact_log = math.log(value)
        est_log, est = asymptotic_popularity(p, n)
        rows.append(AsymptoticRow(
            n=n, exact=str(value), estimate=est,
            estimate_log=est_log, exact_log=exact_log,
            log_ratio=exact_log - est_log,
        ))
    return AsymptoticReport(class_id=p.value, rows=tuple(rows))
