"""Exact truncated bivariate power series and the family equation solvers.

A series is stored as one integer polynomial in x per power of z.  Two
flavors share the representation: under OGF the row ``c[n]`` is the literal
polynomial, under EGF the stored integer ``c[n][k]`` carries an implicit
1/k! on ``x^k`` (so the table holds plain counts of labeled objects and no
rationals ever appear).  Derivative in x is then an index shift in both
flavors, and the EGF product is a binomial convolution.

Seven families are solved order by order in z.  Equations whose right side
contains a same-order derivative are triangular in the x-degree and fall to
back-substitution from the top degree down.  Every solution is re-checked
against its defining equation before being returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import comb


class Flavor(Enum):
    EGF = "egf"
    OGF = "ogf"


class FamilyName(Enum):
    L = "L"  # all linear terms
    LB = "LB"  # neutral terms
    LR = "LR"  # normal terms
    PB = "PB"  # planar neutral terms
    PR = "PR"  # planar normal terms
    QB = "QB"  # neutral exchange classes
    QR = "QR"  # normal exchange classes


# ---------------------------------------------------------------------------
# Row (polynomial in x) arithmetic


def _strip(row: list[int]) -> list[int]:
    while row and row[-1] == 0:
        row.pop()
    return row


def _at(row: list[int], k: int) -> int:
    return row[k] if 0 <= k < len(row) else 0


def _add_rows(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


def _mul_rows_ogf(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _mul_rows_egf(a: list[int], b: list[int]) -> list[int]:
    # labeled product: c[k] = sum over i+j=k of C(k, i) a[i] b[j]
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += comb(i + j, i) * x * y
    return out


def _taylor_shift_row(row: list[int]) -> list[int]:
    # p(x) -> p(x + 1)
    out = [0] * len(row)
    for k, c in enumerate(row):
        if c:
            for j in range(k + 1):
                out[j] += comb(k, j) * c
    return out


def _back_substitute(known: list[int], kmax: int) -> list[int]:
    """Solve c[k] = known[k] + c[k+1] with c vanishing above degree kmax."""
    for k in range(kmax + 1, len(known)):
        if known[k]:
            raise ArithmeticError(
                f"degree bound violated: known coefficient at x^{k} exceeds {kmax}"
            )
    c = [0] * (kmax + 2)
    for k in range(kmax, -1, -1):
        c[k] = _at(known, k) + c[k + 1]
    return _strip(c[: kmax + 1])


# ---------------------------------------------------------------------------
# Series values


class BiSeries:
    """Truncated series in z whose z^n coefficient is an integer polynomial in x."""

    __slots__ = ("flavor", "rows")

    def __init__(self, flavor: Flavor, rows, trunc: int | None = None):
        cleaned = [_strip(list(r)) for r in rows]
        if trunc is not None:
            if len(cleaned) > trunc + 1:
                cleaned = cleaned[: trunc + 1]
            while len(cleaned) < trunc + 1:
                cleaned.append([])
        self.flavor = flavor
        self.rows = cleaned

    @property
    def trunc(self) -> int:
        return len(self.rows) - 1

    def coeff(self, n: int, k: int) -> int:
        if not 0 <= n <= self.trunc:
            return 0
        return _at(self.rows[n], k)

    def row(self, n: int) -> list[int]:
        return list(self.rows[n]) if 0 <= n <= self.trunc else []

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BiSeries)
            and self.flavor is other.flavor
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"BiSeries({self.flavor.value}, {self.rows})"

    def _like(self, rows) -> "BiSeries":
        return BiSeries(self.flavor, rows, trunc=self.trunc)

    def _require(self, flavor: Flavor, op: str) -> None:
        if self.flavor is not flavor:
            raise ValueError(f"{op} requires {flavor.value} flavor, got {self.flavor.value}")

    def add(self, other: "BiSeries") -> "BiSeries":
        if self.flavor is not other.flavor:
            raise ValueError("flavor mismatch")
        if self.trunc != other.trunc:
            raise ValueError("truncation mismatch")
        return self._like([_add_rows(a, b) for a, b in zip(self.rows, other.rows)])

    __add__ = add

    def mul(self, other: "BiSeries") -> "BiSeries":
        """z-convolution, with the x-part multiplied according to the flavor."""
        if self.flavor is not other.flavor:
            raise ValueError("flavor mismatch")
        if self.trunc != other.trunc:
            raise ValueError("truncation mismatch")
        row_mul = _mul_rows_egf if self.flavor is Flavor.EGF else _mul_rows_ogf
        rows = []
        for n in range(self.trunc + 1):
            acc: list[int] = []
            for i in range(n + 1):
                acc = _add_rows(acc, row_mul(self.rows[i], other.rows[n - i]))
            rows.append(acc)
        return self._like(rows)

    __mul__ = mul

    def d_dx(self) -> "BiSeries":
        """Derivative in x of an EGF-in-x series: an index shift on each row."""
        self._require(Flavor.EGF, "d_dx")
        return self._like([row[1:] for row in self.rows])

    def discrete_d(self) -> "BiSeries":
        """(a(z,x) - a(z,0)) / x for an OGF-in-x series."""
        self._require(Flavor.OGF, "discrete_d")
        return self._like([row[1:] for row in self.rows])

    def taylor_shift(self) -> "BiSeries":
        """Substitute x + 1 for x, row by row (OGF-in-x only)."""
        self._require(Flavor.OGF, "taylor_shift")
        return self._like([_taylor_shift_row(row) for row in self.rows])

    def z_shift(self, by: int = 1) -> "BiSeries":
        """Multiply by z^by, dropping overflow past the truncation."""
        rows = [[] for _ in range(by)] + self.rows[: self.trunc + 1 - by]
        return self._like(rows)

    def eval_x(self, value: int) -> list[int]:
        """Evaluate each z-row at a literal x value (OGF reading)."""
        return [sum(c * value**k for k, c in enumerate(row)) for row in self.rows]

    def closed_sequence(self, first: int = 1, last: int | None = None) -> list[int]:
        last = self.trunc if last is None else last
        return [self.coeff(n, 0) for n in range(first, last + 1)]


def _x_series(flavor: Flavor, trunc: int) -> BiSeries:
    return BiSeries(flavor, [[0, 1]], trunc=trunc)


def _zx_series(trunc: int) -> BiSeries:
    return BiSeries(Flavor.EGF, [[], [0, 1]], trunc=trunc)


# ---------------------------------------------------------------------------
# Solvers


def _rows_linear(trunc: int) -> list[list[int]]:
    # family of all linear terms: same-order derivative, so back-substitute
    rows: list[list[int]] = [[]]
    for n in range(1, trunc + 1):
        known = [1 if k == 1 and n == 1 else 0 for k in range(2)]
        for i in range(1, n):
            known = _add_rows(known, _mul_rows_egf(rows[i], rows[n - i]))
        rows.append(_back_substitute(known, n))
    return rows


def _rows_neutral_normal(trunc: int, egf: bool) -> tuple[list[list[int]], list[list[int]]]:
    row_mul = _mul_rows_egf if egf else _mul_rows_ogf
    b_rows: list[list[int]] = [[0, 1]]
    r_rows: list[list[int]] = [[]]
    for n in range(1, trunc + 1):
        r_rows.append(_back_substitute(b_rows[n - 1], n))
        acc: list[int] = []
        for i in range(n):
            acc = _add_rows(acc, row_mul(b_rows[i], r_rows[n - i]))
        b_rows.append(acc)
    return b_rows, r_rows


def _rows_quotient(trunc: int) -> tuple[list[list[int]], list[list[int]]]:
    # first route: the mutual pair, with the shifted-argument sum as the
    # abstraction rule
    b_rows: list[list[int]] = [[0, 1]]
    r_rows: list[list[int]] = [[]]
    for n in range(1, trunc + 1):
        r_rows.append(_taylor_shift_row(b_rows[n - 1]))
        acc: list[int] = []
        for i in range(n):
            acc = _add_rows(acc, _mul_rows_ogf(b_rows[i], r_rows[n - i]))
        b_rows.append(acc)
    # second route: the single self-referential equation B(z,x) = x + z B(z,x) B(z,x+1)
    alt: list[list[int]] = [[0, 1]]
    for n in range(1, trunc + 1):
        acc = []
        for i in range(n):
            acc = _add_rows(acc, _mul_rows_ogf(alt[i], _taylor_shift_row(alt[n - 1 - i])))
        alt.append(acc)
    if [_strip(list(r)) for r in b_rows] != [_strip(list(r)) for r in alt]:
        raise ArithmeticError("quotient solver routes disagree")
    return b_rows, r_rows


@dataclass(frozen=True)
class FamilySolution:
    which: FamilyName
    series: BiSeries


def _verify_linear(s: BiSeries) -> None:
    rhs = _zx_series(s.trunc).add(s.mul(s)).add(s.d_dx())
    if s != rhs:
        raise ArithmeticError("linear family solution fails its equation")


def _verify_pair(b: BiSeries, r: BiSeries, egf: bool) -> None:
    if b != _x_series(b.flavor, b.trunc).add(b.mul(r)):
        raise ArithmeticError("neutral family solution fails its equation")
    deriv = r.d_dx() if egf else r.discrete_d()
    if r != b.z_shift().add(deriv):
        raise ArithmeticError("normal family solution fails its equation")


def _verify_quotient(b: BiSeries, r: BiSeries) -> None:
    if b != _x_series(Flavor.OGF, b.trunc).add(b.mul(b.taylor_shift()).z_shift()):
        raise ArithmeticError("quotient solution fails its fixpoint equation")
    if r != b.taylor_shift().z_shift():
        raise ArithmeticError("quotient abstraction rule fails")
    # closed normal classes match the shifted row sums of the neutral classes
    evaluated = b.eval_x(1)
    for n in range(1, b.trunc + 1):
        if r.coeff(n, 0) != evaluated[n - 1]:
            raise ArithmeticError("closed quotient column disagrees with row sums")


def solve(which: FamilyName | str, trunc: int = 12) -> FamilySolution:
    """Solve one family's functional equation to the given z-truncation.

    All coefficients are exact integers.  Internal consistency (the defining
    equation, and route agreement for the quotient families) is asserted
    before returning; a failure raises ArithmeticError.
    """
    which = FamilyName(which) if isinstance(which, str) else which
    if trunc < 0:
        raise ValueError("truncation must be non-negative")
    if which is FamilyName.L:
        series = BiSeries(Flavor.EGF, _rows_linear(trunc), trunc=trunc)
        _verify_linear(series)
        return FamilySolution(which, series)
    if which in (FamilyName.LB, FamilyName.LR, FamilyName.PB, FamilyName.PR):
        egf = which in (FamilyName.LB, FamilyName.LR)
        flavor = Flavor.EGF if egf else Flavor.OGF
        b_rows, r_rows = _rows_neutral_normal(trunc, egf)
        b = BiSeries(flavor, b_rows, trunc=trunc)
        r = BiSeries(flavor, r_rows, trunc=trunc)
        _verify_pair(b, r, egf)
        series = b if which in (FamilyName.LB, FamilyName.PB) else r
        return FamilySolution(which, series)
    b_rows, r_rows = _rows_quotient(trunc)
    b = BiSeries(Flavor.OGF, b_rows, trunc=trunc)
    r = BiSeries(Flavor.OGF, r_rows, trunc=trunc)
    _verify_quotient(b, r)
    series = b if which is FamilyName.QB else r
    return FamilySolution(which, series)


# ---------------------------------------------------------------------------
# Exports


def solution_to_csv(sol: FamilySolution) -> str:
    lines = ["family,n,k,coeff"]
    s = sol.series
    for n in range(s.trunc + 1):
        for k in range(n + 2):
            lines.append(f"{sol.which.value},{n},{k},{s.coeff(n, k)}")
    return "\n".join(lines) + "\n"


def solution_to_json(sol: FamilySolution) -> str:
    s = sol.series
    data = {
        "family": sol.which.value,
        "flavor": s.flavor.value,
        "trunc": s.trunc,
        "rows": [s.row(n) for n in range(s.trunc + 1)],
    }
    return json.dumps(data, indent=2) + "\n"
