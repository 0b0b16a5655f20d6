"""Parsers, serializers and converters for knot diagram notations.

Three notations are supported:

* Gauss codes: the cyclic sequence of crossing visits along the curve.
  Each token is ``(O|U)<label>(+|-)?``, e.g. ``O3`` or ``U12-``.  ``O``/``U``
  say whether the strand passes over or under at that visit, the optional
  trailing sign is the crossing sign.  Tokens may be separated by
  whitespace and/or commas, or packed together (``O1+U2+``); ``#`` starts
  a comment that runs to the end of the line.

* DT codes: ``c`` signed even integers.  Visits are numbered 1..2c along
  the curve; entry ``i`` pairs odd number ``2i-1`` with the even number
  ``|e_i|``, and ``e_i > 0`` means the odd-numbered visit is the overpass.

* PD codes: one quadruple ``X(a,b,c,d)`` per crossing listing the edge
  labels counterclockwise from the incoming under-strand.  Edge labels are
  1..2c, each appearing exactly twice.  A JSON-style ``[[a,b,c,d],...]``
  spelling is also accepted.

Values are plain immutable data.  Gauss codes are normalized on
construction: labels are renumbered 1..c in order of first appearance and
each crossing's sign is carried on both of its visits.  ``serialize``
additionally picks a canonical anchor, so two codes describe the same
anchored-but-unlabelled diagram exactly when their serializations match.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import CodeSyntaxError, StructureError

__all__ = [
    "PLUS",
    "MINUS",
    "UNSIGNED",
    "GaussToken",
    "GaussCode",
    "DTCode",
    "PDCode",
    "parse_gauss",
    "parse_dt",
    "parse_pd",
    "serialize",
    "canonical",
    "dt_to_gauss",
    "gauss_to_dt",
    "pd_to_gauss",
    "detect_notation",
]

PLUS = 1
MINUS = -1
UNSIGNED = 0


class GaussToken(NamedTuple):
    """One visit to a crossing: label, over/under flag, crossing sign."""

    label: int
    over: bool
    sign: int  # PLUS, MINUS or UNSIGNED

    def render(self) -> str:
        mark = {PLUS: "+", MINUS: "-", UNSIGNED: ""}[self.sign]
        return f"{'O' if self.over else 'U'}{self.label}{mark}"


@dataclass(frozen=True)
class GaussCode:
    """Normalized Gauss code; ``tokens`` is the anchored visit sequence."""

    tokens: tuple[GaussToken, ...]

    @property
    def crossings(self) -> int:
        return len(self.tokens) // 2


@dataclass(frozen=True)
class DTCode:
    """Dowker-Thistlethwaite code: the signed even partner of 1,3,5,..."""

    evens: tuple[int, ...]

    @property
    def crossings(self) -> int:
        return len(self.evens)


@dataclass(frozen=True)
class PDCode:
    """Planar diagram code: one edge quadruple per crossing."""

    quads: tuple[tuple[int, int, int, int], ...]

    @property
    def crossings(self) -> int:
        return len(self.quads)


# ---------------------------------------------------------------------------
# lexing helpers
# ---------------------------------------------------------------------------

_GAUSS_WORD = re.compile(r"[OoUu]\d+[+-]?")
_INT_WORD = re.compile(r"[+-]?\d+\Z")


def _strip_comments(text: str) -> str:
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    return " ".join(line.split("#", 1)[0] for line in lines)


def _split_words(text: str) -> list[str]:
    return [w for w in re.split(r"[\s,]+", _strip_comments(text)) if w]


# ---------------------------------------------------------------------------
# Gauss codes
# ---------------------------------------------------------------------------

def _build_gauss(raw: Sequence[tuple[int, bool, int]]) -> GaussCode:
    """Validate raw (label, over, sign) visits and normalize them.

    Normalization renumbers labels 1..c by first appearance and spreads
    each crossing's sign onto both visits.  The anchor (which visit is
    first) is preserved.
    """
    visits: dict[int, list[tuple[bool, int]]] = {}
    for label, over, sign in raw:
        visits.setdefault(label, []).append((over, sign))
    for label, pair in visits.items():
        if len(pair) != 2:
            raise StructureError(
                f"crossing {label} appears {len(pair)} time(s), expected 2"
            )
        if pair[0][0] == pair[1][0]:
            way = "over" if pair[0][0] else "under"
            raise StructureError(f"crossing {label} is {way} at both visits")
        signs = {s for _, s in pair if s != UNSIGNED}
        if len(signs) > 1:
            raise StructureError(f"crossing {label} has contradictory signs")

    crossing_sign = {
        label: next((s for _, s in pair if s != UNSIGNED), UNSIGNED)
        for label, pair in visits.items()
    }
    relabel: dict[int, int] = {}
    for label, _, _ in raw:
        if label not in relabel:
            relabel[label] = len(relabel) + 1
    tokens = tuple(
        GaussToken(relabel[label], over, crossing_sign[label])
        for label, over, _ in raw
    )
    return GaussCode(tokens)


def parse_gauss(text: str) -> GaussCode:
    """Parse Gauss notation.  Raises CodeSyntaxError / StructureError.

    Empty input is the zero-crossing diagram.
    """
    words = _split_words(text)
    raw: list[tuple[int, bool, int]] = []
    for word in words:
        # words may pack several tokens: O1+U2+O3+...
        pos = 0
        while pos < len(word):
            match = _GAUSS_WORD.match(word, pos)
            if match is None:
                raise CodeSyntaxError(f"bad Gauss token at {word[pos:]!r}")
            tok = match.group(0)
            over = tok[0] in "Oo"
            if tok[-1] in "+-":
                sign = PLUS if tok[-1] == "+" else MINUS
                label = int(tok[1:-1])
            else:
                sign = UNSIGNED
                label = int(tok[1:])
            raw.append((label, over, sign))
            pos = match.end()
    return _build_gauss(raw)


def _anchored_key(tokens: Sequence[GaussToken], shift: int) -> tuple:
    """Comparison key of the rotation starting at ``shift``, relabelled."""
    n = len(tokens)
    relabel: dict[int, int] = {}
    key = []
    for i in range(n):
        tok = tokens[(shift + i) % n]
        if tok.label not in relabel:
            relabel[tok.label] = len(relabel) + 1
        # token order: O before U, then label, then sign (+ before - before none)
        key.append((0 if tok.over else 1, relabel[tok.label],
                    {PLUS: 0, MINUS: 1, UNSIGNED: 2}[tok.sign]))
    return tuple(key)


def canonical(code: GaussCode) -> GaussCode:
    """The canonical representative among rotations and relabellings.

    Every rotation is relabelled by first appearance from its own anchor
    and the lexicographically least token sequence wins, which makes the
    form idempotent and invariant under rotation of the input.
    """
    n = len(code.tokens)
    if n == 0:
        return code
    best = min(range(n), key=lambda s: _anchored_key(code.tokens, s))
    rotated = code.tokens[best:] + code.tokens[:best]
    return _build_gauss([(t.label, t.over, t.sign) for t in rotated])


# ---------------------------------------------------------------------------
# DT codes
# ---------------------------------------------------------------------------

def parse_dt(text: str) -> DTCode:
    """Parse DT notation.  Raises CodeSyntaxError / StructureError.

    Empty input is the zero-crossing diagram.  The grammar demands even
    entries, so an odd magnitude is a syntax error; being a permutation
    of 2..2c is a structural requirement on top of that.
    """
    words = _split_words(text)
    evens: list[int] = []
    for word in words:
        if _INT_WORD.match(word) is None:
            raise CodeSyntaxError(f"bad DT entry {word!r}")
        value = int(word)
        if value == 0 or value % 2 != 0:
            raise CodeSyntaxError(f"DT entry {value} is not a nonzero even number")
        evens.append(value)
    c = len(evens)
    if sorted(abs(v) for v in evens) != list(range(2, 2 * c + 1, 2)):
        raise StructureError("DT entries are not a permutation of 2,4,...,2c")
    return DTCode(tuple(evens))


def dt_to_gauss(dt: DTCode) -> GaussCode:
    """Expand a DT code into the Gauss code it abbreviates.

    Crossing signs are not recoverable from DT notation and are left
    unsigned.
    """
    c = dt.crossings
    slots: list[tuple[int, bool] | None] = [None] * (2 * c)
    for i, entry in enumerate(dt.evens):
        odd_pos = 2 * i          # 0-based position of visit number 2i+1
        even_pos = abs(entry) - 1
        over_at_odd = entry > 0
        slots[odd_pos] = (i + 1, over_at_odd)
        slots[even_pos] = (i + 1, not over_at_odd)
    raw = [(label, over, UNSIGNED) for label, over in slots]  # type: ignore[misc]
    return _build_gauss(raw)


def gauss_to_dt(code: GaussCode) -> DTCode:
    """Abbreviate a Gauss code to DT form, keeping the same anchor.

    Raises StructureError when some crossing is visited twice at the same
    parity, which happens exactly for codes that DT notation cannot
    express.
    """
    positions: dict[int, list[int]] = {}
    for pos, tok in enumerate(code.tokens):
        positions.setdefault(tok.label, []).append(pos + 1)  # 1-based
    evens: list[int] = [0] * code.crossings
    for label, (p, q) in positions.items():
        if p % 2 == q % 2:
            raise StructureError(
                f"crossing {label} is visited at positions {p} and {q}; "
                "equal parity cannot be written in DT notation"
            )
        odd_pos, even_pos = (p, q) if p % 2 == 1 else (q, p)
        over_at_odd = code.tokens[odd_pos - 1].over
        evens[(odd_pos - 1) // 2] = even_pos if over_at_odd else -even_pos
    return DTCode(tuple(evens))


# ---------------------------------------------------------------------------
# PD codes
# ---------------------------------------------------------------------------

_PD_QUAD = re.compile(
    r"[Xx]\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)"
)
_PD_BRACKET = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str) -> PDCode:
    """Parse PD notation.  Raises CodeSyntaxError / StructureError."""
    cleaned = _strip_comments(text)
    if not cleaned.strip():
        raise StructureError("empty PD code")
    pattern = _PD_QUAD if re.search(r"[Xx]\s*\(", cleaned) else _PD_BRACKET
    quads = [
        (int(a), int(b), int(c), int(d))
        for a, b, c, d in pattern.findall(cleaned)
    ]
    leftover = pattern.sub(" ", cleaned)
    if re.sub(r"[\s,\[\]]+", "", leftover):
        raise CodeSyntaxError(f"unrecognized PD text near {leftover.strip()!r}")
    if not quads:
        raise StructureError("empty PD code")
    c = len(quads)
    counts: dict[int, int] = {}
    for quad in quads:
        for edge in quad:
            counts[edge] = counts.get(edge, 0) + 1
    if sorted(counts) != list(range(1, 2 * c + 1)) or set(counts.values()) != {2}:
        raise StructureError("PD edge labels must be 1..2c, each used twice")
    return PDCode(tuple(sorted(quads)))


def pd_to_gauss(pd: PDCode) -> GaussCode:
    """Trace the curve of a PD code and emit the signed Gauss code.

    The under-strand of each crossing runs from the first to the third
    entry of its quadruple; following those directions around the diagram
    determines the over-strand directions and hence every crossing sign.
    Raises StructureError if the quadruples do not close into a single
    consistently-oriented curve.
    """
    incidence: dict[int, list[tuple[int, int]]] = {}
    for ci, quad in enumerate(pd.quads):
        for slot, edge in enumerate(quad):
            incidence.setdefault(edge, []).append((ci, slot))

    c = pd.crossings
    raw: list[tuple[int, bool, int]] = []
    signs: dict[int, int] = {}
    seen: set[tuple[int, int]] = set()
    here = (0, 0)  # enter crossing 0 along its incoming under-strand
    for _ in range(2 * c):
        ci, slot = here
        if here in seen:
            raise StructureError("PD traversal revisits a strand; not a knot")
        seen.add(here)
        over = slot in (1, 3)
        if over:
            signs[ci] = PLUS if slot == 3 else MINUS
        raw.append((ci + 1, over, UNSIGNED))
        exit_slot = (slot + 2) % 4
        edge = pd.quads[ci][exit_slot]
        ends = incidence[edge]
        nxt = ends[0] if ends[0] != (ci, exit_slot) else ends[1]
        if nxt[1] == 2:
            raise StructureError(
                f"edge {edge} runs against the under-strand orientation"
            )
        here = nxt
    if here != (0, 0):
        raise StructureError("PD traversal does not close up; not a knot")
    if len({ci for ci, _ in seen}) != c:
        raise StructureError("PD code describes more than one component")
    raw_signed = [(label, over, signs[label - 1]) for label, over, _ in raw]
    return _build_gauss(raw_signed)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def serialize(code: GaussCode | DTCode | PDCode) -> str:
    """Canonical text for a code; reparsing yields the canonical value."""
    if isinstance(code, GaussCode):
        return "".join(tok.render() for tok in canonical(code).tokens)
    if isinstance(code, DTCode):
        return " ".join(str(v) for v in code.evens)
    if isinstance(code, PDCode):
        return " ".join(f"X({a},{b},{c},{d})" for a, b, c, d in sorted(code.quads))
    raise TypeError(f"cannot serialize {type(code).__name__}")


def detect_notation(text: str) -> str:
    """Guess the notation of ``text``: ``gauss``, ``pd`` or ``dt``."""
    body = _strip_comments(text).strip()
    if not body:
        return "gauss"  # empty text is the zero-crossing Gauss code
    head = body[0]
    if head in "OoUu":
        return "gauss"
    if head in "Xx[":
        return "pd"
    if re.fullmatch(r"[-+\d\s,]+", body):
        return "dt"
    raise CodeSyntaxError(f"cannot detect notation of {body[:30]!r}")
