"""Two-prime row decomposition and the correction-term scan.

For a prime p the interval grid splits into rows: row i is the union of
the cells (x/(n*p), x/(n*p - i)) over the columns n, and its gap set is
the complement of that union inside (0, x).  Row and gap partition the
integers of (0, x), so their p-coprime Mertens sums always add up to
the value over (0, x).

The decomposition pairs a second, smaller prime q with p and splits the
p-series into

    (p - q) * Mp'(0, x)   +   gap terms from the long rows i = q..p-1
                          +   leftover terms from the short rows i < q
                              minus the q-diagram rows,

and compares the total against -(p - q).  The exact equation is treated
as a hypothesis under test: how the gap terms are signed and which
coprimality measure weighs the q-diagram rows is ambiguous, so both
choices are implemented and every report carries its interpretation
tag.  The difference of the two plain series Sigma_p - Sigma_q is
interpretation-free and is the consequence the acceptance grid checks.

Correction magnitudes |gap + leftover| / (p - q) are compared against
sqrt(x) by exact squaring; no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .intervals import IntervalSet, OpenInterval, floor_rational
from .moebius import MobiusTable, is_prime, mertens_coprime, primes_below
from .verify import IntervalGrid


@dataclass(frozen=True)
class Interpretation:
    """Tagged reading of the ambiguous decomposition terms.

    gap_sign: -1 subtracts gap sums (the reading that telescopes into
    Sigma_p - Sigma_q), +1 adds them.  leftover_measure: 'p' sums the
    q-diagram rows with the p-coprime measure, 'q' with the q-coprime
    measure (its own series).
    """

    gap_sign: int = -1
    leftover_measure: str = "p"

    def __post_init__(self) -> None:
        if self.gap_sign not in (-1, 1):
            raise ValueError("gap_sign must be -1 or +1")
        if self.leftover_measure not in ("p", "q"):
            raise ValueError("leftover_measure must be 'p' or 'q'")

    @property
    def tag(self) -> str:
        sign = "-" if self.gap_sign < 0 else "+"
        return f"gaps{sign};leftover=M{self.leftover_measure}"


DEFAULT_INTERPRETATION = Interpretation()


@dataclass(frozen=True)
class RowDiagram:
    """Rows and gap sets of the interval grid for one prime."""

    x: Fraction
    p: int
    m: int
    rows: dict[int, IntervalSet]
    gaps: dict[int, IntervalSet]


def build_row_diagram(x: Fraction, p: int) -> RowDiagram:
    """Build every row i = 1..p-1 with its gap set; asserts the integer partition."""
    x = Fraction(x)
    grid = IntervalGrid(x=x, p=p)
    universe = OpenInterval(Fraction(0), x)
    rows: dict[int, IntervalSet] = {}
    gaps: dict[int, IntervalSet] = {}
    for i in range(1, p):
        row = IntervalSet(grid.row(i))
        gap = row.complement_within(universe)  # partition asserted inside
        rows[i] = row
        gaps[i] = gap
    return RowDiagram(x=x, p=p, m=grid.m, rows=rows, gaps=gaps)


def row_sum(
    diagram: RowDiagram,
    i: int,
    table: Optional[MobiusTable] = None,
    coprime_to: Optional[int] = None,
) -> int:
    """Mertens sum over row i, coprime to the diagram prime unless overridden."""
    p = coprime_to if coprime_to is not None else diagram.p
    return sum(mertens_coprime(part, p, table) for part in diagram.rows[i])


def gap_sum(
    diagram: RowDiagram,
    i: int,
    table: Optional[MobiusTable] = None,
    coprime_to: Optional[int] = None,
) -> int:
    """Mertens sum over the gap set of row i."""
    p = coprime_to if coprime_to is not None else diagram.p
    return sum(mertens_coprime(part, p, table) for part in diagram.gaps[i])


def series_sum(x: Fraction, p: int, table: Optional[MobiusTable] = None) -> int:
    """Sigma_p: the full double sum, regrouped as a sum of row sums."""
    diagram = build_row_diagram(x, p)
    return sum(row_sum(diagram, i, table) for i in range(1, p))


@dataclass(frozen=True)
class StrategyReport:
    """Decomposition of the p-series against the target -(p - q)."""

    x: Fraction
    p: int
    q: int
    interpretation: str
    regime_ok: bool  # q < p < x < q**2 < p**2
    term_main: int
    term_gaps: int
    term_leftover: int
    total: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.total == self.expected

    @property
    def correction(self) -> Fraction:
        """|gap + leftover terms| / (p - q); zero for the degenerate q == p."""
        if self.p == self.q:
            return Fraction(0)
        return Fraction(abs(self.term_gaps + self.term_leftover), self.p - self.q)


def _validate_pair(x: Fraction, p: int, q: int) -> None:
    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"p={p} and q={q} must be prime")
    if q > p or not Fraction(p) < x:
        raise ValueError(f"need q <= p < x, got q={q}, p={p}, x={x}")


def strategy_decomposition(
    x: Fraction,
    p: int,
    q: int,
    interpretation: Interpretation = DEFAULT_INTERPRETATION,
    table: Optional[MobiusTable] = None,
) -> StrategyReport:
    """Evaluate the two-prime decomposition under one tagged interpretation."""
    x = Fraction(x)
    _validate_pair(x, p, q)
    if table is None:
        table = MobiusTable.upto(max(1, floor_rational(x)))
    diagram_p = build_row_diagram(x, p)
    mp_x = mertens_coprime(OpenInterval(Fraction(0), x), p, table)

    term_main = (p - q) * mp_x
    term_gaps = interpretation.gap_sign * sum(
        gap_sum(diagram_p, i, table) for i in range(q, p)
    )
    top_rows = sum(row_sum(diagram_p, i, table) for i in range(1, q))
    if q == p:
        q_rows = top_rows
    else:
        diagram_q = build_row_diagram(x, q)
        measure = p if interpretation.leftover_measure == "p" else q
        q_rows = sum(row_sum(diagram_q, i, table, coprime_to=measure) for i in range(1, q))
    term_leftover = top_rows - q_rows

    regime_ok = q < p and Fraction(p) < x and x < Fraction(q * q) and q * q < p * p
    return StrategyReport(
        x=x,
        p=p,
        q=q,
        interpretation=interpretation.tag,
        regime_ok=regime_ok,
        term_main=term_main,
        term_gaps=term_gaps,
        term_leftover=term_leftover,
        total=term_main + term_gaps + term_leftover,
        expected=-(p - q),
    )


def correction_magnitude(
    x: Fraction,
    p: int,
    q: int,
    interpretation: Interpretation = DEFAULT_INTERPRETATION,
    table: Optional[MobiusTable] = None,
) -> Fraction:
    return strategy_decomposition(x, p, q, interpretation, table).correction


def within_sqrt(value: Fraction, x: Fraction) -> bool:
    """value <= sqrt(x), decided exactly by squaring."""
    return value * value <= Fraction(x)


def default_pair_selector(x: Fraction) -> list[tuple[int, int]]:
    """Largest prime q with q**2 > x that still leaves a prime p in (q, x); p is the next prime."""
    x = Fraction(x)
    ps = primes_below(x)
    for idx in range(len(ps) - 2, -1, -1):
        q = ps[idx]
        if Fraction(q * q) > x:
            return [(ps[idx + 1], q)]
    return []


@dataclass(frozen=True)
class StrategyScanRow:
    """One exponent-scan measurement: best correction for the selected pair at x."""

    x: Fraction
    p: int
    q: int
    mp_x: int
    correction: Fraction
    within_sqrt: bool
    total: int
    expected: int
    interpretation: str


def exponent_scan(
    x_grid: Sequence[Fraction],
    selector: Callable[[Fraction], list[tuple[int, int]]] = default_pair_selector,
    interpretation: Interpretation = DEFAULT_INTERPRETATION,
    table: Optional[MobiusTable] = None,
) -> list[StrategyScanRow]:
    """Per-x best correction magnitude over the selector's (p, q) pairs."""
    rows: list[StrategyScanRow] = []
    for x in x_grid:
        x = Fraction(x)
        pairs = selector(x)
        if not pairs:
            continue
        best: Optional[tuple[Fraction, int, int, StrategyReport]] = None
        for p, q in pairs:
            report = strategy_decomposition(x, p, q, interpretation, table)
            key = (report.correction, p, q)
            if best is None or key < (best[0], best[1], best[2]):
                best = (report.correction, p, q, report)
        assert best is not None
        correction, p, q, report = best
        mp_x = mertens_coprime(OpenInterval(Fraction(0), x), p, table)
        rows.append(
            StrategyScanRow(
                x=x,
                p=p,
                q=q,
                mp_x=mp_x,
                correction=correction,
                within_sqrt=within_sqrt(correction, x),
                total=report.total,
                expected=report.expected,
                interpretation=report.interpretation,
            )
        )
    return rows
