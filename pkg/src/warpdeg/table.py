"""Bundled knot table: named knots, diagram codes, and theorem checks.

The table file is line-delimited: a JSON header ``{"format":
"knots-table", "version": 1}`` followed by one JSON object per knot.
Blank lines and ``#`` comment lines are ignored.  Each record names a
knot, states its crossing number and classification flags, lists Gauss
codes for minimal diagrams (crossing count equal to the crossing number)
and optionally for extra non-minimal diagrams, and may carry expected
invariant values from independent sources.

Aggregation semantics: e(K) is the minimum of the warping sum e(D) over
all minimal diagrams of K, and md(K) the minimum warping degree over
minimal diagrams and both orientations.  Both are computed here over the
*bundled* minimal diagrams, so they are upper bounds in general and
exact when the bundled set provably contains every minimal diagram
(``minimal_complete``).  md carries one extra promotion: a computed
value of 2 is exact for any knot other than the trivial knot, 3_1 and
4_1, because those three are the only knots with md < 2.

The reduced warping sum ê(K) -- the minimum of e(D) over ALL diagrams --
can only be bounded by a finite table: below by the classification of
small values (0 for the trivial knot, 2 for twist knots, otherwise 4,
since no knot has ê equal to 1 or 3), above by the best bundled diagram.

``verify_paper`` runs the whole battery of theorem and example checks
over a table and reports every pass/fail as data rather than raising.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .codes import parse_gauss
from .diagram import OrientedDiagram, from_gauss
from .errors import DataError
from .warping import WarpingSummary, summary

__all__ = [
    "ExpectedValues",
    "KnotEntry",
    "KnotTable",
    "CheckRow",
    "VerificationReport",
    "load_table",
    "knot_e",
    "knot_md",
    "e_hat_bounds",
    "verify_paper",
]

_TABLE_FORMAT = "knots-table"
_TABLE_VERSION = 1

# the only knots with minimal warping degree 0 or 1
_SMALL_MD_NAMES = ("0_1", "3_1", "4_1")


@dataclass(frozen=True)
class ExpectedValues:
    """Reference invariant values attached to a table entry.

    ``e``, ``md`` and ``e_hat`` are the knot's true warping sum, minimal
    warping degree and reduced warping sum; ``ascending`` and
    ``unknotting`` are the classical a(K) and u(K).  Every field is
    optional; absent means no independent source was available.
    """

    e: int | None = None
    md: int | None = None
    e_hat: int | None = None
    ascending: int | None = None
    unknotting: int | None = None


@dataclass(frozen=True)
class KnotEntry:
    """One named knot with its diagrams and expected values."""

    name: str
    crossings: int
    prime: bool
    alternating: bool
    twist: int | None  # n when the knot has the two-region pattern (2, n)
    minimal_codes: tuple[str, ...]
    minimal_complete: bool
    extra_codes: tuple[str, ...] = ()
    expected: ExpectedValues | None = None
    minimal_diagrams: tuple[OrientedDiagram, ...] = field(default=(), repr=False)
    extra_diagrams: tuple[OrientedDiagram, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class KnotTable:
    """An immutable, name-indexed collection of knot entries."""

    entries: tuple[KnotEntry, ...]

    def __iter__(self) -> Iterator[KnotEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return any(entry.name == name for entry in self.entries)

    def __getitem__(self, name: str) -> KnotEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)


# ---------------------------------------------------------------------------
# loading
# ---------------------------------------------------------------------------

def _parse_diagrams(name: str, codes: Iterable[str]) -> tuple[OrientedDiagram, ...]:
    diagrams = []
    for code in codes:
        try:
            diagrams.append(from_gauss(parse_gauss(code)))
        except Exception as exc:
            raise DataError(f"{name}: bad diagram code {code!r}: {exc}") from exc
    return tuple(diagrams)


def _entry_from_json(obj: dict) -> KnotEntry:
    try:
        name = obj["name"]
        expected = None
        if "expected" in obj:
            exp = obj["expected"]
            expected = ExpectedValues(
                e=exp.get("e"),
                md=exp.get("md"),
                e_hat=exp.get("e_hat"),
                ascending=exp.get("ascending"),
                unknotting=exp.get("unknotting"),
            )
        entry = KnotEntry(
            name=name,
            crossings=obj["crossings"],
            prime=obj["prime"],
            alternating=obj["alternating"],
            twist=obj.get("twist"),
            minimal_codes=tuple(obj["minimal"]),
            minimal_complete=obj["minimal_complete"],
            extra_codes=tuple(obj.get("extra", ())),
            expected=expected,
        )
    except (KeyError, TypeError) as exc:
        raise DataError(f"malformed table record: {exc}: {obj!r}") from exc
    return _attach_diagrams(entry)


def _attach_diagrams(entry: KnotEntry) -> KnotEntry:
    return KnotEntry(
        name=entry.name,
        crossings=entry.crossings,
        prime=entry.prime,
        alternating=entry.alternating,
        twist=entry.twist,
        minimal_codes=entry.minimal_codes,
        minimal_complete=entry.minimal_complete,
        extra_codes=entry.extra_codes,
        expected=entry.expected,
        minimal_diagrams=_parse_diagrams(entry.name, entry.minimal_codes),
        extra_diagrams=_parse_diagrams(entry.name, entry.extra_codes),
    )


def validate_entry(entry: KnotEntry) -> list[str]:
    """Structural problems of one entry; empty list when well-formed."""
    problems = []
    if not entry.name:
        problems.append("empty name")
    if entry.crossings < 0:
        problems.append("negative crossing number")
    if not entry.minimal_codes:
        problems.append("no minimal diagrams")
    if len(entry.minimal_diagrams) != len(entry.minimal_codes) or \
            len(entry.extra_diagrams) != len(entry.extra_codes):
        problems.append("diagram codes not parsed")
    for diagram in entry.minimal_diagrams:
        if diagram.crossings != entry.crossings:
            problems.append(
                f"minimal diagram has {diagram.crossings} crossings, "
                f"entry says {entry.crossings}"
            )
    if entry.twist is not None:
        if entry.twist < 1:
            problems.append("twist parameter below 1")
        elif entry.crossings != entry.twist + 2:
            problems.append("twist parameter inconsistent with crossing number")
    exp = entry.expected
    if exp is not None:
        for label in ("e", "md", "e_hat", "ascending", "unknotting"):
            value = getattr(exp, label)
            if value is not None and value < 0:
                problems.append(f"negative expected {label}")
        if exp.unknotting is not None and exp.ascending is not None \
                and exp.unknotting > exp.ascending:
            problems.append("expected unknotting exceeds expected ascending")
        if exp.ascending is not None and exp.md is not None \
                and exp.ascending > exp.md:
            problems.append("expected ascending exceeds expected md")
    return problems


def default_table_path() -> Path:
    from importlib.resources import files

    return Path(str(files("warpdeg").joinpath("data/knots.tbl")))


def load_table(path: str | Path | None = None) -> KnotTable:
    """Load a table file, validating the header and every entry."""
    location = Path(path) if path is not None else default_table_path()
    try:
        text = location.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read table {location}: {exc}") from exc

    lines = [
        line for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise DataError(f"{location}: missing table header")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise DataError(f"{location}: bad header line: {exc}") from exc
    if not isinstance(header, dict) or header.get("format") != _TABLE_FORMAT:
        raise DataError(f"{location}: not a {_TABLE_FORMAT} file")
    if header.get("version") != _TABLE_VERSION:
        raise DataError(
            f"{location}: unsupported version {header.get('version')!r}"
        )

    entries = []
    names = set()
    for line in lines[1:]:
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataError(f"{location}: bad record line: {exc}") from exc
        entry = _entry_from_json(obj)
        problems = validate_entry(entry)
        if problems:
            raise DataError(f"{location}: {entry.name}: " + "; ".join(problems))
        if entry.name in names:
            raise DataError(f"{location}: duplicate entry {entry.name!r}")
        names.add(entry.name)
        entries.append(entry)
    return KnotTable(tuple(entries))


# ---------------------------------------------------------------------------
# aggregated invariants
# ---------------------------------------------------------------------------

def _minimal_summaries(entry: KnotEntry) -> list[WarpingSummary]:
    return [summary(diagram) for diagram in entry.minimal_diagrams]


def knot_e(entry: KnotEntry) -> tuple[int, bool]:
    """(min of e(D) over bundled minimal diagrams, exactness flag).

    The warping sum is orientation-free, so one orientation per diagram
    suffices.  The value is e(K) itself when the bundled minimal set is
    complete, otherwise an upper bound for it.
    """
    value = min(s.warping_sum for s in _minimal_summaries(entry))
    return value, entry.minimal_complete


def knot_md(entry: KnotEntry) -> tuple[int, bool]:
    """(min warping degree over bundled minimal diagrams and orientations,
    exactness flag).

    Exact when the minimal set is complete, and also when the value is 2
    for a knot other than the trivial knot, 3_1 and 4_1: those three are
    the only knots with md below 2, so an md of at most 2 is an md of
    exactly 2 for everything else.
    """
    value = min(
        min(s.d_forward, s.d_reverse) for s in _minimal_summaries(entry)
    )
    exact = entry.minimal_complete or (
        value == 2 and entry.name not in _SMALL_MD_NAMES
    )
    return value, exact


def e_hat_bounds(entry: KnotEntry) -> tuple[int, int]:
    """Bounds (lower, upper) for the reduced warping sum of the knot.

    Lower bound from the small-value classification: 0 for the trivial
    knot, 2 for twist knots, otherwise 4 (no knot has a reduced sum of 1
    or 3).  Upper bound from the best diagram bundled with the entry,
    minimal or not.
    """
    if entry.crossings == 0:
        lower = 0
    elif entry.twist is not None:
        lower = 2
    else:
        lower = 4
    upper = min(
        summary(diagram).warping_sum
        for diagram in entry.minimal_diagrams + entry.extra_diagrams
    )
    return lower, upper


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckRow:
    """One verified fact: check name, entry scope, outcome, details."""

    check: str
    scope: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple[CheckRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> tuple[CheckRow, ...]:
        return tuple(row for row in self.rows if not row.passed)

    def records(self) -> list[dict]:
        return [
            {
                "check": row.check,
                "scope": row.scope,
                "passed": row.passed,
                "details": row.details,
            }
            for row in self.rows
        ]

    def render_text(self) -> str:
        lines = []
        order: list[str] = []
        by_check: dict[str, list[CheckRow]] = {}
        for row in self.rows:
            if row.check not in by_check:
                order.append(row.check)
                by_check[row.check] = []
            by_check[row.check].append(row)
        for check in order:
            rows = by_check[check]
            failed = [row for row in rows if not row.passed]
            if failed:
                lines.append(f"FAIL {check}: {len(failed)} of {len(rows)}")
                for row in failed:
                    lines.append(f"  {row.scope}: {row.details}")
            else:
                lines.append(f"pass {check} ({len(rows)})")
        if self.passed:
            lines.append(f"ALL CHECKS PASSED ({len(self.rows)} checks)")
        else:
            lines.append(
                f"{len(self.failures)} CHECKS FAILED "
                f"(of {len(self.rows)})"
            )
        return "\n".join(lines)


@dataclass(frozen=True)
class _EntryStats:
    """Cached per-entry computations shared by all checks."""

    entry: KnotEntry
    summaries: tuple[WarpingSummary, ...]  # one per minimal diagram
    e_value: int
    md_value: int
    e_exact: bool  # true e(K) known: complete minimal set or expected.e

    @property
    def true_e(self) -> int | None:
        if self.entry.expected is not None and self.entry.expected.e is not None:
            return self.entry.expected.e
        if self.entry.minimal_complete:
            return self.e_value
        return None

    @property
    def d_pairs(self) -> list[tuple[int, int]]:
        return [(s.d_forward, s.d_reverse) for s in self.summaries]


def _stats(entry: KnotEntry) -> _EntryStats:
    summaries = tuple(_minimal_summaries(entry))
    e_value = min(s.warping_sum for s in summaries)
    md_value = min(min(s.d_forward, s.d_reverse) for s in summaries)
    e_exact = entry.minimal_complete or (
        entry.expected is not None and entry.expected.e is not None
    )
    return _EntryStats(entry, summaries, e_value, md_value, e_exact)


def _is_alternating_diagram(diagram: OrientedDiagram) -> bool:
    occ = diagram.occurrences
    return all(
        occ[i].over != occ[(i + 1) % len(occ)].over for i in range(len(occ))
    ) if occ else False


def _twist_pair_ok(n: int, pair: tuple[int, int]) -> bool:
    if n % 2 == 1:
        want = (n + 1) // 2
        return pair == (want, want)
    return set(pair) == {n // 2, (n + 2) // 2}


def verify_paper(table: KnotTable | Iterable[KnotEntry]) -> VerificationReport:
    """Run every theorem, example and consistency check over a table.

    Returns a report of per-(check, entry) rows; failures are data, not
    exceptions, and a malformed entry fails its own rows without
    stopping the rest.
    """
    entries = list(table)
    rows: list[CheckRow] = []
    stats: dict[str, _EntryStats] = {}

    # entry-valid: structural soundness; broken entries opt out of the rest
    for entry in entries:
        problems = validate_entry(entry)
        if problems:
            rows.append(CheckRow("entry-valid", entry.name, False,
                                 "; ".join(problems)))
            continue
        try:
            stats[entry.name] = _stats(entry)
        except Exception as exc:  # diagram-level failure counts as data error
            rows.append(CheckRow("entry-valid", entry.name, False, str(exc)))
            continue
        rows.append(CheckRow("entry-valid", entry.name, True))

    live = [entry for entry in entries if entry.name in stats]
    by_name = {entry.name: entry for entry in live}

    # expected-e / expected-md: computed aggregates match reference values
    for entry in live:
        exp = entry.expected
        if exp is None:
            continue
        st = stats[entry.name]
        if exp.e is not None:
            ok = st.e_value == exp.e
            rows.append(CheckRow(
                "expected-e", entry.name, ok,
                f"computed {st.e_value}, expected {exp.e}" if not ok else "",
            ))
        if exp.md is not None:
            ok = st.md_value == exp.md
            rows.append(CheckRow(
                "expected-md", entry.name, ok,
                f"computed {st.md_value}, expected {exp.md}" if not ok else "",
            ))

    # e-upper-bound: e(K) <= c(K) - 1 for nontrivial knots
    for entry in live:
        if entry.crossings == 0:
            continue
        st = stats[entry.name]
        ok = st.e_value <= entry.crossings - 1
        rows.append(CheckRow(
            "e-upper-bound", entry.name, ok,
            f"e={st.e_value} exceeds c-1={entry.crossings - 1}" if not ok else "",
        ))

    # e-prime-alternating: equality e(K) = c(K) - 1 for prime alternating
    for entry in live:
        if not (entry.prime and entry.alternating and entry.crossings > 0):
            continue
        st = stats[entry.name]
        ok = st.e_value == entry.crossings - 1
        rows.append(CheckRow(
            "e-prime-alternating", entry.name, ok,
            f"e={st.e_value}, want {entry.crossings - 1}" if not ok else "",
        ))

    # e-only-if: equality fails for every knot that is not prime alternating
    for entry in live:
        if entry.crossings == 0 or (entry.prime and entry.alternating):
            continue
        st = stats[entry.name]
        if st.true_e is None:
            continue  # only a bound is known; the strict check needs e(K)
        ok = st.true_e < entry.crossings - 1
        rows.append(CheckRow(
            "e-only-if", entry.name, ok,
            f"e={st.true_e} reaches c-1 without prime alternating"
            if not ok else "",
        ))

    # e-classification: values 0, 2, 3 pin the knot; value 1 never occurs
    pinned = {0: "0_1", 2: "3_1", 3: "4_1"}
    for entry in live:
        st = stats[entry.name]
        ok = True
        details = ""
        if st.e_value == 1:
            ok, details = False, "warping sum 1 is impossible"
        elif st.e_value in pinned and entry.name != pinned[st.e_value]:
            ok = False
            details = f"e={st.e_value} is reserved for {pinned[st.e_value]}"
        elif entry.name in pinned.values():
            want = next(k for k, v in pinned.items() if v == entry.name)
            if st.e_value != want:
                ok, details = False, f"e={st.e_value}, want {want}"
        rows.append(CheckRow("e-classification", entry.name, ok, details))

    # md-from-e: knots with e(K) in {4, 5} have md(K) = 2
    for entry in live:
        st = stats[entry.name]
        if st.true_e not in (4, 5):
            continue
        ok = st.md_value == 2
        rows.append(CheckRow(
            "md-from-e", entry.name, ok,
            f"e={st.true_e} forces md=2, computed {st.md_value}"
            if not ok else "",
        ))

    # five-crossing-values: e(5_1) = e(5_2) = 4
    for name in ("5_1", "5_2"):
        if name in by_name:
            st = stats[name]
            ok = st.e_value == 4
            rows.append(CheckRow(
                "five-crossing-values", name, ok,
                f"e={st.e_value}, want 4" if not ok else "",
            ))

    # orientation-splits: the bundled diagram pairs of 7_6 and 8_12
    for name, want in (("7_6", [{3}, {2, 4}]), ("8_12", [{3, 4}, {2, 5}])):
        if name not in by_name:
            continue
        st = stats[name]
        got = [set(pair) for pair in st.d_pairs]
        ok = (
            len(got) == len(want)
            and all(pair in got for pair in want)
            and all(s.warping_sum == by_name[name].crossings - 1
                    for s in st.summaries)
        )
        rows.append(CheckRow(
            "orientation-splits", name, ok,
            f"d-pairs {sorted(map(sorted, got))}" if not ok else "",
        ))

    # nonalternating-four: e = 4 realized by the bundled minimal diagrams
    for name in ("8_21", "granny"):
        if name in by_name:
            st = stats[name]
            ok = st.e_value == 4
            rows.append(CheckRow(
                "nonalternating-four", name, ok,
                f"e={st.e_value}, want 4" if not ok else "",
            ))

    # twist-formula: the (2, n) entries obey the d-pair formula,
    # md = floor((n+1)/2) and e = n+1
    for entry in live:
        if entry.twist is None:
            continue
        n = entry.twist
        st = stats[entry.name]
        ok = (
            len(st.d_pairs) == 1
            and _twist_pair_ok(n, st.d_pairs[0])
            and st.md_value == (n + 1) // 2
            and st.e_value == n + 1
        )
        rows.append(CheckRow(
            "twist-formula", entry.name, ok,
            f"n={n}, d-pairs {st.d_pairs}, md={st.md_value}, e={st.e_value}"
            if not ok else "",
        ))

    # alternating-span: every alternating bundled diagram has span 1
    for entry in live:
        diagrams = entry.minimal_diagrams + entry.extra_diagrams
        alternating = [d for d in diagrams if _is_alternating_diagram(d)]
        if not alternating:
            continue
        bad = [
            d.crossings for d in alternating if summary(d).span != 1
        ]
        rows.append(CheckRow(
            "alternating-span", entry.name, not bad,
            f"alternating diagram with span != 1 (c={bad})" if bad else "",
        ))

    # e-hat-window: bounds honor the classification and any expected value
    for entry in live:
        lower, upper = e_hat_bounds(entry)
        ok = lower <= upper
        details = ""
        exp = entry.expected
        if ok and exp is not None and exp.e_hat is not None:
            ok = lower <= exp.e_hat <= upper
            details = "" if ok else (
                f"expected e_hat {exp.e_hat} outside [{lower}, {upper}]"
            )
        elif not ok:
            details = f"bounds crossed: [{lower}, {upper}]"
        rows.append(CheckRow("e-hat-window", entry.name, ok, details))

    # e-hat-twist: a twist entry with its sum-2 diagram pins the bounds
    for entry in live:
        if entry.twist is None:
            continue
        lower, upper = e_hat_bounds(entry)
        ok = (lower, upper) == (2, 2)
        rows.append(CheckRow(
            "e-hat-twist", entry.name, ok,
            f"bounds ({lower}, {upper}), want (2, 2)" if not ok else "",
        ))

    # e-hat-six-three: the reconstructed non-minimal diagram pins 6_3 at 4
    if "6_3" in by_name:
        lower, upper = e_hat_bounds(by_name["6_3"])
        if (lower, upper) == (4, 4):
            rows.append(CheckRow("e-hat-six-three", "6_3", True))
        elif (lower, upper) == (4, 5) and not by_name["6_3"].extra_codes:
            rows.append(CheckRow(
                "e-hat-six-three", "6_3", True,
                "gap: bounds (4, 5); no sum-4 diagram bundled",
            ))
        else:
            rows.append(CheckRow(
                "e-hat-six-three", "6_3", False,
                f"bounds ({lower}, {upper})",
            ))

    # ordering: unknotting <= ascending <= md against computed md
    for entry in live:
        exp = entry.expected
        if exp is None or (exp.ascending is None and exp.unknotting is None):
            continue
        st = stats[entry.name]
        ok = True
        details = ""
        if exp.ascending is not None and exp.ascending > st.md_value:
            ok = False
            details = f"ascending {exp.ascending} exceeds md {st.md_value}"
        if exp.unknotting is not None and exp.unknotting > st.md_value:
            ok = False
            details = f"unknotting {exp.unknotting} exceeds md {st.md_value}"
        rows.append(CheckRow("ordering", entry.name, ok, details))

    return VerificationReport(tuple(rows))
