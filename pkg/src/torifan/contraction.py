"""Classification of crepant extremal contractions on smooth toric 3-folds.

A degree-0 extremal primitive relation determines a crepant contraction.
The interesting shape is x+ + x- = 2*x0: when the star of x0 consists of
exactly four maximal cones pairing {x+, x-} against two further rays
{y+, y-}, and the whole configuration is unimodularly equivalent to

    x0 = (1,0,0), x+ = (1,1,0), x- = (1,-1,0), y+ = (0,0,1), y- = (0,a,-1)

with 0 <= a <= 2, the contraction collapses the divisor at x0 (a Hirzebruch
surface of degree a) onto a rational curve of anticanonical degree 2. The
detector works intrinsically through the quotient fan at x0 and then
reconstructs the witness basis change; the witness step is what pins the
anticanonical degree of the image curve to exactly 2 (the quotient alone
cannot see it).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .fan import Fan, cone_contains, quotient_fan, star, validate, hirzebruch_fan
from .lattice import Matrix, invert_unimodular, matmul, matvec
from .isomorphism import find_isomorphism
from .primitive import PrimitiveRelation, is_extremal, primitive_collections

_NORMAL_FORM_BASIS: Matrix = ((1, 1, 0), (0, 1, 0), (0, 0, 1))  # columns x0, x+, y+


@dataclass(frozen=True)
class ContractionKind:
    """Tagged classification of a crepant extremal contraction."""

    kind: str  # "zero_two" | "divisor_to_point" | "small" | "other"
    a: Optional[int] = None
    exceptional_ray: Optional[int] = None

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "zero_two":
            out["a"] = self.a
            out["exceptional_ray"] = self.exceptional_ray
        return out


@dataclass(frozen=True)
class WeakenedVerdict:
    is_weak_fano: bool
    is_fano: bool
    crepant_contractions: tuple[tuple[PrimitiveRelation, ContractionKind], ...]
    is_weakened: bool

    def to_dict(self) -> dict:
        return {
            "is_weak_fano": self.is_weak_fano,
            "is_fano": self.is_fano,
            "is_weakened": self.is_weakened,
            "crepant_contractions": [
                {"relation": rel.to_dict(), "contraction": kind.to_dict()}
                for rel, kind in self.crepant_contractions
            ],
        }


def hirzebruch_type(fan2d: Fan, assume_valid: bool = False) -> Optional[int]:
    """Degree a >= 0 if the complete smooth 2-fan is a Hirzebruch surface, else None."""
    if fan2d.dim != 2 or len(fan2d.rays) != 4:
        return None
    if not assume_valid:
        report = validate(fan2d)
        if not (report.is_smooth and report.is_complete):
            return None
    rels = primitive_collections(fan2d, assume_valid=True)
    if len(rels) != 2 or any(len(r.collection) != 2 for r in rels):
        return None
    # the fiber pair sums to zero; the section pair sums to a times a fiber ray
    # (the degree may exceed 2 here: quotients of weak Fano fans need not be weak Fano)
    zero = [r for r in rels if not r.coeffs]
    if len(zero) == 2:
        candidate = 0
    elif len(zero) == 1:
        other = next(r for r in rels if r.coeffs)
        if len(other.coeffs) != 1:
            return None
        candidate = other.coeffs[0][1]
    else:
        return None
    if find_isomorphism(fan2d, hirzebruch_fan(candidate)) is None:
        return None
    return candidate


def zero_two_normal_form_witness(
    fan: Fan, rel: PrimitiveRelation
) -> Optional[tuple[Matrix, tuple[int, int, int, int, int], int]]:
    """Witness (U, (x0, x+, x-, y+, y-), a) mapping the configuration onto its normal form.

    Returns None unless the relation is x+ + x- = 2*x0 and the fan around x0
    matches the four-cone shape exactly, including the crepancy constraint
    U*y- = (0, a, -1).
    """
    if fan.dim != 3:
        return None
    if len(rel.collection) != 2 or len(rel.coeffs) != 1 or rel.coeffs[0][1] != 2:
        return None
    x0 = rel.coeffs[0][0]
    pair = rel.collection
    star_cones = star(fan, x0)
    # every maximal cone at x0 must use exactly one of the two collapsing rays
    for cone in star_cones:
        if len(set(cone) & set(pair)) != 1:
            return None
    side_rays = sorted({i for cone in star_cones for i in cone} - {x0} - set(pair))
    if len(side_rays) != 2 or len(star_cones) != 4:
        return None
    quotient = quotient_fan(fan, x0)
    if len(quotient.rays) != 4:
        return None
    if hirzebruch_type(quotient) is None:
        return None
    cone_set = set(fan.max_cones)
    for xp, xm in (pair, pair[::-1]):
        for yp, ym in (tuple(side_rays), tuple(side_rays[::-1])):
            if tuple(sorted((x0, xp, yp))) not in cone_set:
                continue
            basis = tuple(
                tuple(fan.rays[i][r] for i in (x0, xp, yp)) for r in range(3)
            )
            try:
                u = matmul(_NORMAL_FORM_BASIS, invert_unimodular(basis))
            except ValueError:
                continue
            if matvec(u, fan.rays[xm]) != (1, -1, 0):
                continue
            image_ym = matvec(u, fan.rays[ym])
            if image_ym[0] != 0 or image_ym[2] != -1 or image_ym[1] < 0:
                continue
            a = image_ym[1]
            expected_cones = {
                tuple(sorted((x0, xp, yp))),
                tuple(sorted((x0, xp, ym))),
                tuple(sorted((x0, xm, yp))),
                tuple(sorted((x0, xm, ym))),
            }
            if set(star_cones) != expected_cones:
                continue
            return u, (x0, xp, xm, yp, ym), a
    return None


def classify_contraction(
    fan: Fan,
    rel: PrimitiveRelation,
    relations: Optional[Sequence[PrimitiveRelation]] = None,
    assume_extremal: bool = False,
) -> ContractionKind:
    """Shape dispatch for a degree-0 extremal primitive relation on a 3-fold."""
    if fan.dim != 3:
        raise ValueError("contraction classification is specific to 3-folds")
    if rel.degree != 0:
        raise ValueError(f"relation has degree {rel.degree}; only crepant (degree 0) input is accepted")
    if not assume_extremal and not is_extremal(fan, rel, relations):
        raise ValueError("relation is not extremal; it does not define a primitive contraction")

    if len(rel.collection) == 2 and len(rel.coeffs) == 1:
        if rel.coeffs[0][1] != 2:
            return ContractionKind("other")
        witness = zero_two_normal_form_witness(fan, rel)
        if witness is None:
            return ContractionKind("other")
        _, names, a = witness
        if a > 2:
            return ContractionKind("other")
        return ContractionKind("zero_two", a=a, exceptional_ray=names[0])

    if len(rel.collection) == 3 and len(rel.coeffs) == 1:
        return ContractionKind("divisor_to_point")

    if (
        len(rel.collection) == 2
        and len(rel.coeffs) == 2
        and all(a == 1 for _, a in rel.coeffs)
    ):
        targets = [i for i, _ in rel.coeffs]
        contained = all(
            cone_contains(fan, rel.collection, fan.rays[t]) for t in targets
        )
        return ContractionKind("other") if contained else ContractionKind("small")

    return ContractionKind("other")


def is_weakened_fano(fan: Fan, assume_valid: bool = False) -> WeakenedVerdict:
    """Weak Fano, not Fano, and every crepant primitive contraction collapses
    a Hirzebruch divisor onto a curve of image anticanonical degree 2."""
    if fan.dim != 3:
        raise ValueError("the weakened Fano characterization is specific to 3-folds")
    if not assume_valid:
        report = validate(fan)
        if not report.ok:
            raise ValueError(f"fan does not validate: {report.offending_cones}")
    rels = primitive_collections(fan, assume_valid=True)
    weak = all(r.degree >= 0 for r in rels)
    fano = all(r.degree > 0 for r in rels)
    contractions: list[tuple[PrimitiveRelation, ContractionKind]] = []
    if weak:
        for rel in rels:
            if rel.degree == 0 and is_extremal(fan, rel, rels):
                kind = classify_contraction(fan, rel, rels, assume_extremal=True)
                contractions.append((rel, kind))
    weakened = (
        weak
        and not fano
        and all(kind.kind == "zero_two" for _, kind in contractions)
    )
    return WeakenedVerdict(weak, fano, tuple(contractions), weakened)
