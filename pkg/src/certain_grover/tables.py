"""Summary tables over a sweep of search-space sizes.

Every number here is recomputed from the closed forms in core; nothing is
hard-coded. Table one shows the standard phase-pi optimum and how close it
gets to the quarter turn. Table two shows the smallest certain budget and
the phase that achieves it.
"""

import math
from dataclasses import dataclass

from .core import (
    HALF_PI,
    beta_angle,
    certainty_phase,
    min_certainty_steps,
    optimal_iterations,
)

TABLE_ONE_SIZES = (
    ("2", 2),
    ("4", 4),
    ("8", 8),
    ("100", 100),
    ("1000", 1000),
    ("10^4", 10**4),
    ("10^6", 10**6),
    ("10^8", 10**8),
    ("10^10", 10**10),
    ("2^56", 2**56),
)

TABLE_TWO_SIZES = (
    ("2", 2),
    ("4", 4),
    ("8", 8),
    ("16", 16),
    ("100", 100),
    ("1000", 1000),
    ("10^4", 10**4),
    ("10^6", 10**6),
    ("10^8", 10**8),
    ("10^10", 10**10),
)


@dataclass(frozen=True)
class TableOneRow:
    label: str
    n: int
    j_op: int
    ratio: float  # (2 j_op + 1) beta / (pi/2), 1 exactly when the turn is complete


@dataclass(frozen=True)
class TableTwoRow:
    label: str
    n: int
    steps: int  # smallest certain budget plus the measurement step
    phi: float
    phi_over_pi: float


def table_one() -> "list[TableOneRow]":
    rows = []
    for label, n in TABLE_ONE_SIZES:
        j = optimal_iterations(n)
        ratio = (2 * j + 1) * beta_angle(n) / HALF_PI
        rows.append(TableOneRow(label=label, n=n, j_op=j, ratio=ratio))
    return rows


def table_two() -> "list[TableTwoRow]":
    rows = []
    for label, n in TABLE_TWO_SIZES:
        j = min_certainty_steps(n)
        phi = certainty_phase(n, j)
        rows.append(
            TableTwoRow(
                label=label, n=n, steps=j + 1, phi=phi, phi_over_pi=phi / math.pi
            )
        )
    return rows


def format_table_one(rows=None) -> str:
    if rows is None:
        rows = table_one()
    lines = ["n          j_op        (2 j_op + 1) beta / (pi/2)"]
    for r in rows:
        lines.append(f"{r.label:<10} {r.j_op:<11} {r.ratio:.9f}")
    return "\n".join(lines)


def format_table_two(rows=None) -> str:
    if rows is None:
        rows = table_two()
    lines = ["n          steps       phi / pi"]
    for r in rows:
        lines.append(f"{r.label:<10} {r.steps:<11} {r.phi_over_pi:.6f}")
    return "\n".join(lines)
