"""Primitive collections, primitive relations, degrees and Mori-cone data.

A primitive collection is a minimal set of rays not spanning a cone of the
fan. Its element sum lies in the relative interior of a unique cone, which
yields the primitive relation, its degree (the anticanonical intersection
number of the corresponding 1-cycle class) and its class vector in the
relation lattice. Extremality of a class is decided by exact rational LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .fan import Fan, validate
from .lattice import (
    Vector,
    has_nonneg_combination,
    invert_unimodular,
    matvec,
    smith_normal_form,
    vsum,
)


@dataclass(frozen=True)
class PrimitiveRelation:
    """collection sum = sum of coeffs over the generators of sigma, exactly."""

    collection: tuple[int, ...]
    sigma: tuple[int, ...]
    coeffs: tuple[tuple[int, int], ...]  # (ray index, positive coefficient), sorted
    degree: int
    cls: tuple[int, ...]

    @property
    def coeff_map(self) -> dict[int, int]:
        return dict(self.coeffs)

    def to_dict(self) -> dict:
        return {
            "collection": list(self.collection),
            "sigma": list(self.sigma),
            "coeffs": {str(i): a for i, a in self.coeffs},
            "degree": self.degree,
            "class": list(self.cls),
        }


@dataclass(frozen=True)
class RelationLattice:
    """Kernel of the ray matrix: the lattice of integer relations among rays."""

    rank: int
    basis: tuple[Vector, ...]


class IncompleteFanError(ValueError):
    """Raised when no cone's relative interior contains a collection sum."""


def _face_set(fan: Fan) -> set[frozenset[int]]:
    faces: set[frozenset[int]] = set()
    for cone in fan.max_cones:
        for k in range(len(cone) + 1):
            for sub in combinations(cone, k):
                faces.add(frozenset(sub))
    return faces


def _locate_sigma(fan: Fan, inverses, total: Vector) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    """The unique cone with the sum in its relative interior, with coefficients."""
    if all(x == 0 for x in total):
        return (), ()
    found: Optional[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = None
    for cone, inv in zip(fan.max_cones, inverses):
        coords = matvec(inv, total)
        if all(c >= 0 for c in coords):
            support = tuple(i for i, c in zip(cone, coords) if c > 0)
            coeffs = tuple((i, c) for i, c in zip(cone, coords) if c > 0)
            if found is None:
                found = (support, coeffs)
            elif found != (support, coeffs):
                raise IncompleteFanError(
                    f"sum {total} lies in two distinct faces; fan intersections are improper"
                )
    if found is None:
        raise IncompleteFanError(f"no cone contains {total}; fan is not complete")
    return found


def primitive_collections(fan: Fan, assume_valid: bool = False) -> tuple[PrimitiveRelation, ...]:
    """All primitive relations, in lexicographic order of the collections.

    Minimal non-faces never exceed d+1 elements (every d+1 rays already fail
    to span a cone, cones having at most d generators), so the subset scan
    stops there.
    """
    if not assume_valid:
        report = validate(fan)
        if not report.ok:
            raise ValueError(f"fan does not validate: {report.offending_cones}")
    n = len(fan.rays)
    d = fan.dim
    faces = _face_set(fan)
    inverses = [invert_unimodular(fan.cone_columns(c)) for c in fan.max_cones]
    relations = []
    for size in range(2, d + 2):
        for combo in combinations(range(n), size):
            s = frozenset(combo)
            if s in faces:
                continue
            if any(s - {i} not in faces for i in combo):
                continue
            total = vsum([fan.rays[i] for i in combo], d)
            sigma, coeffs = _locate_sigma(fan, inverses, total)
            degree = len(combo) - sum(a for _, a in coeffs)
            coeff_map = dict(coeffs)
            cls = tuple(
                (1 if i in s else 0) - coeff_map.get(i, 0) for i in range(n)
            )
            relations.append(
                PrimitiveRelation(tuple(combo), sigma, coeffs, degree, cls)
            )
    relations.sort(key=lambda r: r.collection)
    return tuple(relations)


def relation_lattice(fan: Fan) -> RelationLattice:
    """Integer kernel basis of the d x n ray matrix; rank is the Picard number."""
    n = len(fan.rays)
    matrix = tuple(tuple(fan.rays[j][i] for j in range(n)) for i in range(fan.dim))
    _, diag, v = smith_normal_form(matrix)
    kernel = []
    for j in range(n):
        if j >= fan.dim or diag[j][j] == 0:
            kernel.append(tuple(v[i][j] for i in range(n)))
    return RelationLattice(rank=len(kernel), basis=tuple(kernel))


def picard_rank(fan: Fan) -> int:
    return len(fan.rays) - fan.dim


def is_fano(fan: Fan, relations: Optional[Sequence[PrimitiveRelation]] = None) -> bool:
    """True iff every primitive relation has strictly positive degree."""
    rels = primitive_collections(fan) if relations is None else relations
    return all(r.degree > 0 for r in rels)


def is_weak_fano(fan: Fan, relations: Optional[Sequence[PrimitiveRelation]] = None) -> bool:
    """True iff every primitive relation has nonnegative degree."""
    rels = primitive_collections(fan) if relations is None else relations
    return all(r.degree >= 0 for r in rels)


@dataclass(frozen=True)
class TwoElementShape:
    """Shape of a two-element primitive relation on a weak Fano fan."""

    kind: str  # "zero" | "single_ray" | "two_rays"
    a: Optional[int] = None  # coefficient for single_ray
    center: Optional[int] = None  # target ray index for single_ray


def two_element_relation_kind(rel: PrimitiveRelation) -> TwoElementShape:
    """Classify x1 + x2 = 0 / a*y (a in {1,2}) / y1 + y2; anything else errors.

    A two-element relation outside these three shapes cannot occur on a weak
    Fano fan, so hitting the error means the parent fan is not weak Fano.
    """
    if len(rel.collection) != 2:
        raise ValueError("relation does not come from a two-element collection")
    if not rel.coeffs:
        return TwoElementShape("zero")
    if len(rel.coeffs) == 1:
        (ray, a), = rel.coeffs
        if a in (1, 2):
            return TwoElementShape("single_ray", a=a, center=ray)
    if len(rel.coeffs) == 2 and all(a == 1 for _, a in rel.coeffs):
        return TwoElementShape("two_rays")
    raise ValueError(
        f"two-element relation with coefficients {rel.coeffs} violates the weak Fano trichotomy"
    )


def _positive_multiple(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff u = q*v for some rational q > 0."""
    pivot = next((i for i, x in enumerate(v) if x != 0), None)
    if pivot is None:
        return all(x == 0 for x in u)
    if u[pivot] == 0:
        return False
    q = Fraction(u[pivot], v[pivot])
    if q <= 0:
        return False
    return all(Fraction(x) == q * y for x, y in zip(u, v))


def is_extremal(
    fan: Fan,
    rel: PrimitiveRelation,
    relations: Optional[Sequence[PrimitiveRelation]] = None,
) -> bool:
    """Whether the class spans an extremal ray of the cone of all relation classes.

    Decided exactly: the class must not be a nonnegative rational combination
    of the other classes that are not positive multiples of it.
    """
    rels = primitive_collections(fan) if relations is None else relations
    others = [
        r.cls
        for r in rels
        if r.collection != rel.collection and not _positive_multiple(r.cls, rel.cls)
    ]
    if not others:
        return True
    return not has_nonneg_combination(others, rel.cls)


def extremality_flags(
    fan: Fan, relations: Optional[Sequence[PrimitiveRelation]] = None
) -> tuple[bool, ...]:
    rels = primitive_collections(fan) if relations is None else relations
    return tuple(is_extremal(fan, r, rels) for r in rels)


def mori_cone_generated_by_extremal(
    fan: Fan, relations: Optional[Sequence[PrimitiveRelation]] = None
) -> bool:
    """Every relation class is a nonnegative combination of the extremal ones."""
    rels = primitive_collections(fan) if relations is None else relations
    flags = extremality_flags(fan, rels)
    extremal_classes = [r.cls for r, f in zip(rels, flags) if f]
    for r, f in zip(rels, flags):
        if f:
            continue
        if not has_nonneg_combination(extremal_classes, r.cls):
            return False
    return True
