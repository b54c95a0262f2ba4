"""Three-way cross-checks between enumeration, series, and map censuses.

Every check compares two independently computed tables (or a table against
an embedded reference prefix) and records the first divergence, if any.
The embedded data also includes the thirty smallest closed normal terms and
their grouping into exchange classes, which pins the parser, the printer,
the classifier, and the canonicalizer against known ground truth.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import enumeration, exchange, maps, series, terms
from .enumeration import CountTable, Family
from .maps import Variant
from .series import FamilyName
from .terms import Term


@dataclass(frozen=True)
class ReferenceSequences:
    """Closed-term count prefixes, starting at size 1, with OEIS labels."""

    linear_closed: tuple[int, ...] = (1, 5, 60, 1105, 27120, 828250)
    normal_closed: tuple[int, ...] = (1, 3, 26, 367, 7142, 176766)
    planar_normal_closed: tuple[int, ...] = (1, 2, 9, 54, 378, 2916)
    quotient_closed: tuple[int, ...] = (1, 2, 10, 74, 706, 8162)

    oeis: dict[str, str] = field(
        default_factory=lambda: {
            "linear_closed": "A062980",
            "planar_normal_closed": "A000168",
            "quotient_closed": "A000698",
        }
    )


REFERENCE_SEQUENCES = ReferenceSequences()

# The thirty smallest closed normal terms (sizes 1 to 3), grouped into
# exchange classes; the first member of each group is the class listing's
# representative.
NORMAL_CLASS_GROUPS_UP_TO_SIZE_3: tuple[tuple[str, ...], ...] = (
    ("λx. x",),
    ("λx. x(λy. y)",),
    ("λx. λy. x(y)", "λx. λy. y(x)"),
    ("λx. x(λy. y(λz. z))",),
    ("λx. x(λy. λz. y(z))", "λx. x(λy. λz. z(y))"),
    ("λx. x(λy. y)(λz. z)",),
    ("λx. λy. x(y)(λz. z)", "λx. λy. y(x)(λz. z)"),
    ("λx. λy. x(y(λz. z))", "λx. λy. y(x(λz. z))"),
    ("λx. λy. x(λz. y(z))", "λx. λy. y(λz. x(z))"),
    ("λx. λy. x(λz. z(y))", "λx. λy. y(λz. z(x))"),
    ("λx. λy. x(λz. z)(y)", "λx. λy. y(λz. z)(x)"),
    (
        "λx. λy. λz. x(y)(z)",
        "λx. λy. λz. y(x)(z)",
        "λx. λy. λz. x(z)(y)",
        "λx. λy. λz. z(x)(y)",
        "λx. λy. λz. y(z)(x)",
        "λx. λy. λz. z(y)(x)",
    ),
    (
        "λx. λy. λz. x(y(z))",
        "λx. λy. λz. x(z(y))",
        "λx. λy. λz. y(x(z))",
        "λx. λy. λz. y(z(x))",
        "λx. λy. λz. z(x(y))",
        "λx. λy. λz. z(y(x))",
    ),
)

NORMAL_TERMS_UP_TO_SIZE_3: tuple[str, ...] = tuple(
    text for group in NORMAL_CLASS_GROUPS_UP_TO_SIZE_3 for text in group
)

# Closed-term size m corresponds to maps with m - 1 edges for the quotient
# and planar families, and to trivalent maps with 3(m - 1) edges.
MAP_SIZE_SHIFT = 1


@dataclass
class CheckResult:
    name: str
    producers: str
    indices: str
    ok: bool
    divergence: str | None = None

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        where = f": {self.divergence}" if self.divergence else ""
        return f"[{status}] {self.name} ({self.producers}; {self.indices}){where}"


@dataclass
class CrossCheckReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.append(f"crosscheck: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "pass": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "producers": c.producers,
                    "indices": c.indices,
                    "ok": c.ok,
                    "divergence": c.divergence,
                }
                for c in self.checks
            ],
        }
        return json.dumps(data, indent=2) + "\n"


def _compare_cells(
    name: str,
    producers: str,
    left,
    right,
    max_n: int,
) -> CheckResult:
    """Compare two (n, k) -> count views over the triangular window."""
    for n in range(max_n + 1):
        for k in range(n + 2):
            a, b = left(n, k), right(n, k)
            if a != b:
                return CheckResult(
                    name,
                    producers,
                    f"n<={max_n}",
                    False,
                    f"first divergence at (n={n}, k={k}): {a} != {b}",
                )
    return CheckResult(name, producers, f"n<={max_n}", True)


def _compare_sequences(
    name: str, producers: str, got: list[int], want: list[int], first_n: int = 1
) -> CheckResult:
    limit = min(len(got), len(want))
    for i in range(limit):
        if got[i] != want[i]:
            return CheckResult(
                name,
                producers,
                f"n={first_n}..{first_n + limit - 1}",
                False,
                f"first divergence at n={first_n + i}: {got[i]} != {want[i]}",
            )
    return CheckResult(name, producers, f"n={first_n}..{first_n + limit - 1}", True)


_FAMILY_SERIES = {
    Family.LINEAR: FamilyName.L,
    Family.NEUTRAL: FamilyName.LB,
    Family.NORMAL: FamilyName.LR,
    Family.PLANAR_NEUTRAL: FamilyName.PB,
    Family.PLANAR_NORMAL: FamilyName.PR,
}


def _check_reference_terms(report: CrossCheckReport, enum_cap: int) -> None:
    """Pin parsing, printing, classification, and enumeration to the embedded list."""
    parsed: dict[int, set[Term]] = {1: set(), 2: set(), 3: set()}
    problem = None
    for text in NORMAL_TERMS_UP_TO_SIZE_3:
        t = terms.parse(text)
        if not terms.check_linear(t, 0):
            problem = f"{text!r} is not closed linear"
            break
        cls = terms.classify(t)
        if not cls.is_normal:
            problem = f"{text!r} did not classify as normal"
            break
        if terms.parse(terms.render(t)) != t:
            problem = f"{text!r} failed the print/parse round trip"
            break
        parsed[cls.normal_size].add(t)
    if problem is None:
        for n in range(1, min(enum_cap, 3) + 1):
            enumerated = set(enumeration.enum_family(Family.NORMAL, n, 0))
            if enumerated != parsed[n]:
                problem = f"size {n}: enumerated {len(enumerated)} != listed {len(parsed[n])}"
                break
    report.checks.append(
        CheckResult(
            "terms:embedded-list",
            "parser/classifier vs enumeration",
            "sizes 1..3",
            problem is None,
            problem,
        )
    )


def _check_reference_grouping(report: CrossCheckReport) -> None:
    """The embedded class grouping must match canonical-form deduplication."""
    problem = None
    want_groups = {
        frozenset(terms.parse(text) for text in group)
        for group in NORMAL_CLASS_GROUPS_UP_TO_SIZE_3
    }
    got_groups = set()
    for n in (1, 2, 3):
        for group in exchange.class_groups(Family.NORMAL, n, 0):
            got_groups.add(frozenset(group))
    if got_groups != want_groups:
        problem = "class partition differs from the embedded grouping"
    if problem is None:
        for group in NORMAL_CLASS_GROUPS_UP_TO_SIZE_3:
            members = [terms.parse(text) for text in group]
            rep = members[0]
            for t in members:
                if not exchange.is_isomorphic(t, rep):
                    problem = f"{terms.render(t)} not isomorphic to its representative"
                    break
                for swapped in exchange.local_exchanges(t):
                    if exchange.canonicalize(swapped) != exchange.canonicalize(rep):
                        problem = f"an exchange of {terms.render(t)} left its class"
                        break
    report.checks.append(
        CheckResult(
            "classes:embedded-grouping",
            "canonicalize vs embedded classes",
            "sizes 1..3",
            problem is None,
            problem,
        )
    )


def run_crosscheck(
    max_n: int = 5,
    *,
    enum_cap: int = 5,
    maps_cap: int = 4,
    trivalent_edge_cap: int = 6,
    series_trunc: int = 12,
    references: ReferenceSequences = REFERENCE_SEQUENCES,
) -> CrossCheckReport:
    """Run every producer agreement check and reference comparison.

    Enumeration runs to min(max_n, enum_cap); the all-genera and planar map
    censuses run to min(max_n, maps_cap); trivalent censuses cover closed
    sizes m while 3(m - 1) stays within trivalent_edge_cap.  Series always
    reach series_trunc.
    """
    report = CrossCheckReport()
    enum_n = min(max_n, enum_cap)
    maps_n = min(max_n, maps_cap)
    trunc = max(series_trunc, max_n, len(references.linear_closed))

    _check_reference_terms(report, enum_n)
    _check_reference_grouping(report)

    solutions = {name: series.solve(name, trunc).series for name in FamilyName}

    # enumeration against the series coefficients, bivariately
    enum_tables: dict[Family, CountTable] = {}
    for family, which in _FAMILY_SERIES.items():
        table = enumeration.count_family(family, enum_n)
        enum_tables[family] = table
        sol = solutions[which]
        report.checks.append(
            _compare_cells(
                f"enum-vs-series:{family.value}",
                "enumeration vs series",
                table.count,
                sol.coeff,
                enum_n,
            )
        )

    # exchange classes against the quotient series, both routes
    neutral_classes = exchange.count_classes(Family.NEUTRAL, enum_n)
    normal_classes = exchange.count_classes(Family.NORMAL, enum_n)
    report.checks.append(
        _compare_cells(
            "classes-vs-series:neutral",
            "canonical dedup vs quotient series",
            neutral_classes.unlabeled.count,
            solutions[FamilyName.QB].coeff,
            enum_n,
        )
    )
    report.checks.append(
        _compare_sequences(
            "classes-vs-series:normal-closed",
            "canonical dedup vs quotient series",
            normal_classes.labeled.closed_sequence(1, enum_n),
            solutions[FamilyName.QR].closed_sequence(1, enum_n),
        )
    )

    # the two quotient routes are asserted equal inside solve; re-derive the
    # fixpoint route here so the agreement is visible in the report
    qb = solutions[FamilyName.QB]
    fixpoint = series._x_series(series.Flavor.OGF, trunc).add(
        qb.mul(qb.taylor_shift()).z_shift()
    )
    report.checks.append(
        _compare_cells(
            "series:quotient-route-agreement",
            "mutual pair vs fixpoint equation",
            qb.coeff,
            fixpoint.coeff,
            trunc,
        )
    )
    report.checks.append(
        _compare_sequences(
            "series:closed-quotient-shift",
            "closed normal classes vs shifted neutral row sums",
            solutions[FamilyName.QR].closed_sequence(1, trunc),
            qb.eval_x(1)[:-1],
        )
    )

    # map censuses: triple agreement with the quotient series and the classes
    censuses = {
        n: maps.census(n, Variant.ALL_GENERA, cap_override=maps_cap)
        for n in range(1, maps_n + 1)
    }
    planar_censuses = {
        n: maps.census(n, Variant.PLANAR_ONLY, cap_override=maps_cap)
        for n in range(1, maps_n + 1)
    }

    def census_cell(n: int, k: int) -> int:
        return censuses[n].count(n, k) if n in censuses else 0

    def qb_cell_positive(n: int, k: int) -> int:
        return solutions[FamilyName.QB].coeff(n, k) if n >= 1 else 0

    def classes_cell_positive(n: int, k: int) -> int:
        return neutral_classes.unlabeled.count(n, k) if n >= 1 else 0

    report.checks.append(
        _compare_cells(
            "series-vs-census:bivariate",
            "quotient series vs map census",
            qb_cell_positive,
            census_cell,
            maps_n,
        )
    )
    report.checks.append(
        _compare_cells(
            "classes-vs-census:bivariate",
            "canonical dedup vs map census",
            classes_cell_positive,
            census_cell,
            min(maps_n, enum_n),
        )
    )

    parity_problem = None
    for n in censuses:
        for m in maps.census_maps(n, Variant.ALL_GENERA, cap_override=maps_cap):
            chi = (
                maps.cycle_count(m.sigma)
                - maps.cycle_count(m.alpha)
                + maps.cycle_count(maps.faces(m))
            )
            if (2 - chi) % 2 or maps.genus(m) < 0:
                parity_problem = f"map {m.to_text()} has odd Euler defect"
                break
    report.checks.append(
        CheckResult(
            "maps:euler-parity",
            "faces/genus consistency",
            f"n<={maps_n}",
            parity_problem is None,
            parity_problem,
        )
    )

    # planar maps against planar closed terms, shifted by one size
    report.checks.append(
        _compare_sequences(
            "census:planar-vs-planar-terms",
            "planar census vs planar series",
            [planar_censuses[n].total() for n in range(1, maps_n + 1)],
            [
                solutions[FamilyName.PR].coeff(n + MAP_SIZE_SHIFT, 0)
                for n in range(1, maps_n + 1)
            ],
        )
    )

    # trivalent maps against all closed linear terms: size m <-> 3(m-1) edges
    trivalent_sizes = [
        m for m in range(2, max_n + 1) if 3 * (m - 1) <= trivalent_edge_cap
    ]
    if trivalent_sizes:
        got = [
            maps.census(3 * (m - 1), Variant.TRIVALENT).total()
            for m in trivalent_sizes
        ]
        want = [solutions[FamilyName.L].coeff(m, 0) for m in trivalent_sizes]
        report.checks.append(
            _compare_sequences(
                "census:trivalent-vs-linear-terms",
                "trivalent census vs linear series",
                got,
                want,
                first_n=trivalent_sizes[0],
            )
        )

    # embedded reference prefixes
    prefix_checks = [
        ("references:series-linear", FamilyName.L, references.linear_closed),
        ("references:series-normal", FamilyName.LR, references.normal_closed),
        (
            "references:series-planar-normal",
            FamilyName.PR,
            references.planar_normal_closed,
        ),
        ("references:series-quotient", FamilyName.QR, references.quotient_closed),
    ]
    for name, which, want in prefix_checks:
        got = solutions[which].closed_sequence(1, len(want))
        report.checks.append(
            _compare_sequences(name, "series vs embedded prefix", got, list(want))
        )

    enum_prefix_checks = [
        ("references:enum-linear", Family.LINEAR, references.linear_closed),
        ("references:enum-normal", Family.NORMAL, references.normal_closed),
        (
            "references:enum-planar-normal",
            Family.PLANAR_NORMAL,
            references.planar_normal_closed,
        ),
    ]
    for name, family, want in enum_prefix_checks:
        got = enum_tables[family].closed_sequence(1, enum_n)
        report.checks.append(
            _compare_sequences(
                name, "enumeration vs embedded prefix", got, list(want[:enum_n])
            )
        )
    report.checks.append(
        _compare_sequences(
            "references:classes-quotient",
            "canonical dedup vs embedded prefix",
            normal_classes.labeled.closed_sequence(1, enum_n),
            list(references.quotient_closed[:enum_n]),
        )
    )
    report.checks.append(
        _compare_sequences(
            "references:maps-quotient",
            "map census vs embedded prefix (one-size shift)",
            [censuses[n].total() for n in range(1, maps_n + 1)],
            list(references.quotient_closed[MAP_SIZE_SHIFT : maps_n + MAP_SIZE_SHIFT]),
        )
    )
    report.checks.append(
        _compare_sequences(
            "references:maps-planar",
            "planar census vs embedded prefix (one-size shift)",
            [planar_censuses[n].total() for n in range(1, maps_n + 1)],
            list(
                references.planar_normal_closed[
                    MAP_SIZE_SHIFT : maps_n + MAP_SIZE_SHIFT
                ]
            ),
        )
    )

    return report
