"""Structural classification and decomposition of partitions.

A canonical coloring is a two-fold image when its order is odd (and at
least 3) and color 1 sits exactly on the odd positions; it is a five-fold
image when its order is 4 mod 5 (and at least 9), color 1 sits exactly on
residues 1 and 4 mod 5, color 2 exactly on residues 2 and 3, and every
other color only on multiples of 5.  Maximal Gallai-Schur partitions with
more than three colors always match one of the two patterns, so repeatedly
peeling the matching inverse walks any of them down to a catalogue base.

Peeling here is purely structural: whenever the global pattern validates,
the inverse is well defined and is applied, maximal or not (B3A peels to
B1, for instance).  The stopping rule is "no pattern matches", never a
color-count threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Coloring, Kind, check_partition, is_canonical
from .construct import (
    MappingTag,
    apply_mappings,
    inverse_five_fold,
    inverse_two_fold,
)


class StructureClass(Enum):
    FIVE_FOLD_IMAGE = "FiveFoldImage"
    TWO_FOLD_IMAGE = "TwoFoldImage"
    BASE = "Base"


@dataclass(frozen=True)
class Decomposition:
    """A base coloring plus the construction chain rebuilding the original.

    `tags` lists the mappings innermost first, so replaying them in order
    onto `base` reproduces the decomposed coloring exactly.
    """

    base: Coloring
    tags: tuple[MappingTag, ...]
    original_order: int

    def replay(self) -> Coloring:
        return apply_mappings(self.base, self.tags)


def _matches_five_fold(c: Coloring) -> bool:
    if c.n % 5 != 4 or c.n < 9:
        return False
    for x in range(1, c.n + 1):
        v = c.color_of(x)
        m = x % 5
        if m in (1, 4):
            if v != 1:
                return False
        elif m in (2, 3):
            if v != 2:
                return False
        elif v in (1, 2):
            return False
    return True


def _matches_two_fold(c: Coloring) -> bool:
    if c.n % 2 == 0 or c.n < 3:
        return False
    for x in range(1, c.n + 1):
        if (c.color_of(x) == 1) != (x % 2 == 1):
            return False
    return True


def classify(c: Coloring) -> StructureClass:
    """Decide which construction, if any, a canonical coloring came from.

    The check validates the full global pattern, not just a prefix.  The
    two patterns conflict at position 3 whenever both colors 1 and 2 are
    present, so at most one can match; five-fold wins the vacuous overlap.
    Degenerate orders too small to have a preimage are Base.
    """
    if not is_canonical(c):
        raise ValueError("classify requires a canonical coloring")
    if _matches_five_fold(c):
        return StructureClass.FIVE_FOLD_IMAGE
    if _matches_two_fold(c):
        return StructureClass.TWO_FOLD_IMAGE
    return StructureClass.BASE


def peel(c: Coloring) -> tuple[MappingTag, Coloring]:
    """Strip one construction layer off a non-Base canonical coloring."""
    cls = classify(c)
    if cls is StructureClass.FIVE_FOLD_IMAGE:
        return MappingTag.FIVE_FOLD, inverse_five_fold(c)
    if cls is StructureClass.TWO_FOLD_IMAGE:
        return MappingTag.TWO_FOLD, inverse_two_fold(c)
    raise ValueError("cannot peel a Base coloring")


def decompose_full(c: Coloring) -> Decomposition:
    """Peel constructions until a Base coloring remains.

    The tag list comes out innermost first, so `Decomposition.replay`
    rebuilds the input bit-exactly.
    """
    tags: list[MappingTag] = []
    current = c
    while classify(current) is not StructureClass.BASE:
        tag, current = peel(current)
        tags.append(tag)
    tags.reverse()
    return Decomposition(base=current, tags=tuple(tags), original_order=c.n)


def verify_image_structure(c: Coloring, kind: Kind) -> bool:
    """Check that a maximal partition with r > 3 is a construction image.

    The caller certifies maximality (e.g. via exhaustive search) and that
    c is a canonical, verifier-accepted partition with more than three
    colors.  Returns True when c matches one of the two image patterns and
    its peeled preimage again passes the verifier.
    """
    if not is_canonical(c):
        raise ValueError("expected a canonical coloring")
    if c.r <= 3:
        raise ValueError("image structure is only asserted for r > 3")
    if not check_partition(c, kind).ok:
        raise ValueError("expected a verifier-accepted partition")
    if classify(c) is StructureClass.BASE:
        return False
    _, preimage = peel(c)
    return check_partition(preimage, kind).ok
