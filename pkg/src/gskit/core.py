"""Colorings of integer intervals and the Gallai-Schur verifier.

A coloring assigns one of r colors to every integer in [1, n].  It is a
strong Gallai-Schur partition when no triple a + b = c inside the interval
is monochromatic, none is rainbow (three pairwise distinct colors), and all
r colors actually occur.  The strong criterion counts the degenerate sums
a + a = 2a, so no color class may contain a weak pair {a, 2a}; the weak
criterion only forbids monochromatic triples of three distinct integers.
A rainbow triple always has three distinct members (a = b would force two
equal colors), so the rainbow side of the check is the same in both cases.

Every constraint involves a triple whose largest member is c = a + b, so
verification walks c upward and inspects only the pairs summing to c; the
exhaustive search relies on the same fact to reject partial colorings as
soon as a bad triple is completed.

Two textual formats are supported: a compact digit string with digit i
giving the color of i (usable while r <= 9), and an explicit header form
for arbitrary color counts.  See `parse_coloring`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class Kind(Enum):
    """Strong or weak criterion selector for the monochromatic check."""

    STRONG = "strong"
    WEAK = "weak"

    @classmethod
    def from_name(cls, name: str) -> Kind:
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown kind {name!r}; expected 'strong' or 'weak'") from None


class ViolationClass(Enum):
    MONOCHROMATIC_SUM = "MonochromaticSum"
    RAINBOW_SUM = "RainbowSum"
    EMPTY_COLOR = "EmptyColor"
    BAD_COLOR_RANGE = "BadColorRange"


class ParseError(ValueError):
    """Malformed partition text; `position` is the 1-based offending spot."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Coloring:
    """A total coloring of [1, n] with colors drawn from [1, r].

    `colors[i - 1]` is the color of integer i.  Entries are validated to be
    positive; an entry above the declared r is representable (the explicit
    file format allows it) and is reported by the verifier as a
    BadColorRange violation rather than rejected here.
    """

    n: int
    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if self.r < 1:
            raise ValueError(f"color count must be positive, got {self.r}")
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} entries, got {len(self.colors)}")
        if any(v < 1 for v in self.colors):
            raise ValueError("color entries must be >= 1")

    @classmethod
    def from_colors(cls, colors) -> Coloring:
        """Build a coloring from a color sequence, inferring r as the maximum."""
        colors = tuple(colors)
        return cls(n=len(colors), r=max(colors), colors=colors)

    def color_of(self, i: int) -> int:
        return self.colors[i - 1]

    def compact(self) -> str:
        """Digit-string form; only defined while every entry is a single digit."""
        if any(v > 9 for v in self.colors):
            raise ValueError("compact form requires all colors <= 9")
        return "".join(str(v) for v in self.colors)

    def __str__(self) -> str:
        try:
            return self.compact()
        except ValueError:
            return " ".join(str(v) for v in self.colors)


@dataclass(frozen=True)
class Violation:
    """A witness against the partition property.

    For the two sum classes, `triple` holds (a, b, c) with a + b = c and
    a <= b.  EMPTY_COLOR carries the missing color index in `color`;
    BAD_COLOR_RANGE carries the out-of-range color value.
    """

    category: ViolationClass
    triple: tuple[int, int, int] | None = None
    color: int | None = None

    def describe(self) -> str:
        if self.category is ViolationClass.MONOCHROMATIC_SUM:
            return f"monochromatic {self.triple}"
        if self.category is ViolationClass.RAINBOW_SUM:
            return f"rainbow {self.triple}"
        if self.category is ViolationClass.EMPTY_COLOR:
            return f"empty color {self.color}"
        return f"color {self.color} out of range"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple[Violation, ...]

    def __post_init__(self):
        if self.ok != (len(self.violations) == 0):
            raise ValueError("ok must hold exactly when there are no violations")


_FILE_HEADER = re.compile(r"^gspartition v1 kind=(strong|weak) r=([0-9]+) n=([0-9]+)$")


def parse_coloring(text: str) -> Coloring:
    """Parse either textual partition form into a Coloring.

    Compact form: a single line of digits, digit i giving the color of
    integer i; r is inferred as the largest digit.  Explicit form: a
    `gspartition v1` header line declaring kind, r and n, then one line of
    n space-separated color indices and a trailing newline.  The declared r
    is kept even when it exceeds the largest entry (the verifier reports
    the unused colors as empty rather than failing the parse).
    """
    coloring, _ = parse_coloring_with_kind(text)
    return coloring


def parse_coloring_with_kind(text: str) -> tuple[Coloring, Kind | None]:
    """Like `parse_coloring` but also return the kind declared by the
    explicit file form, or None for the compact form."""
    if text.startswith("gspartition"):
        return _parse_file_form(text)
    return _parse_compact(text), None


def _parse_compact(text: str) -> Coloring:
    line = text
    if line.endswith("\n"):
        line = line[:-1]
    if not line:
        raise ParseError("empty input", position=1)
    colors = []
    for pos, ch in enumerate(line, start=1):
        if not ch.isdigit():
            raise ParseError(f"invalid character {ch!r} at position {pos}", position=pos)
        if ch == "0":
            raise ParseError(f"color 0 at position {pos}; colors start at 1", position=pos)
        colors.append(int(ch))
    return Coloring.from_colors(colors)


def _parse_file_form(text: str) -> tuple[Coloring, Kind]:
    if not text.endswith("\n"):
        raise ParseError("missing trailing newline")
    lines = text[:-1].split("\n")
    if len(lines) != 2:
        raise ParseError(f"expected exactly 2 lines, got {len(lines)}")
    m = _FILE_HEADER.match(lines[0])
    if m is None:
        raise ParseError(f"bad header line {lines[0]!r}", position=1)
    kind = Kind(m.group(1))
    r = int(m.group(2))
    n = int(m.group(3))
    if r < 1 or n < 1:
        raise ParseError("r and n must be positive", position=1)
    tokens = lines[1].split(" ")
    if len(tokens) != n:
        raise ParseError(f"expected {n} entries, got {len(tokens)}", position=2)
    colors = []
    for pos, tok in enumerate(tokens, start=1):
        if not tok.isdigit():
            raise ParseError(f"entry {pos} is not a decimal number: {tok!r}", position=pos)
        v = int(tok)
        if v < 1:
            raise ParseError(f"entry {pos} is 0; colors start at 1", position=pos)
        colors.append(v)
    return Coloring(n=n, r=r, colors=tuple(colors)), kind


def to_file_form(c: Coloring, kind: Kind) -> str:
    """Bit-exact explicit file form (header, entries, trailing newline)."""
    return (
        f"gspartition v1 kind={kind.value} r={c.r} n={c.n}\n"
        + " ".join(str(v) for v in c.colors)
        + "\n"
    )


def check_partition(c: Coloring, kind: Kind, exhaustive: bool = False) -> Verdict:
    """Verify the Gallai-Schur property of a coloring.

    Walks the triple maximum c upward and inspects every pair a + b = c.
    A triple is monochromatic when all three colors agree (a = b counted
    only under the strong kind) and rainbow when all three differ.  After
    the sweep, every color in [1, r] must occur.  With `exhaustive` the
    verdict carries every witness; by default the first one found stops
    the scan.
    """
    violations: list[Violation] = []

    for bad in sorted({v for v in c.colors if v > c.r}):
        violations.append(Violation(ViolationClass.BAD_COLOR_RANGE, color=bad))
        if not exhaustive:
            return Verdict(ok=False, violations=tuple(violations))

    strong = kind is Kind.STRONG
    chi = (0,) + c.colors  # 1-indexed access
    for total in range(2, c.n + 1):
        cc = chi[total]
        for a in range(1, total // 2 + 1):
            b = total - a
            ca, cb = chi[a], chi[b]
            if ca == cb:
                if ca == cc and (strong or a != b):
                    violations.append(
                        Violation(ViolationClass.MONOCHROMATIC_SUM, triple=(a, b, total))
                    )
                    if not exhaustive:
                        return Verdict(ok=False, violations=tuple(violations))
            elif ca != cc and cb != cc:
                violations.append(
                    Violation(ViolationClass.RAINBOW_SUM, triple=(a, b, total))
                )
                if not exhaustive:
                    return Verdict(ok=False, violations=tuple(violations))

    present = set(c.colors)
    for color in range(1, c.r + 1):
        if color not in present:
            violations.append(Violation(ViolationClass.EMPTY_COLOR, color=color))
            if not exhaustive:
                return Verdict(ok=False, violations=tuple(violations))

    return Verdict(ok=not violations, violations=tuple(violations))


def canonicalize(c: Coloring) -> Coloring:
    """Relabel colors so that first occurrences appear in increasing order.

    The relabeling is the unique bijection on [1, r] mapping the i-th color
    to appear to label i; colors that never occur keep their relative order
    after the occurring ones.  Idempotent, and the verifier's verdict is
    invariant under it.
    """
    if any(v > c.r for v in c.colors):
        raise ValueError("cannot canonicalize a coloring with out-of-range entries")
    mapping: dict[int, int] = {}
    for v in c.colors:
        if v not in mapping:
            mapping[v] = len(mapping) + 1
    next_label = len(mapping) + 1
    for v in range(1, c.r + 1):
        if v not in mapping:
            mapping[v] = next_label
            next_label += 1
    return Coloring(n=c.n, r=c.r, colors=tuple(mapping[v] for v in c.colors))


def is_canonical(c: Coloring) -> bool:
    return canonicalize(c) == c


def color_classes(c: Coloring) -> list[set[int]]:
    """The color classes S_1 .. S_r; disjoint sets covering [1, n]."""
    if any(v > c.r for v in c.colors):
        raise ValueError("coloring has out-of-range entries")
    classes: list[set[int]] = [set() for _ in range(c.r)]
    for i, v in enumerate(c.colors, start=1):
        classes[v - 1].add(i)
    return classes
