"""Fans of rational polyhedral cones in Z^d and exact validation.

A fan is stored as its primitive ray generators plus the maximal cones as
index sets; every geometric question (smoothness, completeness, membership)
is decided in exact integer/rational arithmetic. Completeness is certified
by facet pairing plus pairwise proper intersection, which is sound for the
dimensions this package targets (d <= 3).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .lattice import (
    Matrix,
    Vector,
    adjugate,
    cross3,
    determinant,
    is_primitive,
    kernel_directions,
    make_primitive,
    matrix_from_columns,
    matvec,
    smith_normal_form,
    solve_rational,
    vdot,
)

Cone = tuple[int, ...]


def _normalize_cone(indices: Iterable[int]) -> Cone:
    out = tuple(sorted(int(i) for i in indices))
    if len(set(out)) != len(out):
        raise ValueError(f"cone has repeated ray indices: {out}")
    return out


@dataclass(frozen=True)
class Fan:
    """G(fan) plus maximal cones; the sole model of a toric variety here."""

    dim: int
    rays: tuple[Vector, ...]
    max_cones: tuple[Cone, ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "max_cones", tuple(_normalize_cone(c) for c in self.max_cones))

    def cone_columns(self, cone: Sequence[int]) -> Matrix:
        return matrix_from_columns([self.rays[i] for i in cone])

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def fan_from_dict(data: dict) -> Fan:
    try:
        dim = int(data["dim"])
        rays = tuple(tuple(int(x) for x in r) for r in data["rays"])
        cones = tuple(_normalize_cone(c) for c in data["max_cones"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed fan data: {exc}") from exc
    for r in rays:
        if len(r) != dim:
            raise ValueError(f"ray {r} does not have {dim} coordinates")
    return Fan(dim, rays, cones)


def fan_from_json(text: str) -> Fan:
    return fan_from_dict(json.loads(text))


@dataclass(frozen=True)
class ValidationReport:
    is_simplicial: bool
    is_smooth: bool
    is_complete: bool
    offending_cones: tuple[tuple[str, tuple[int, ...]], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.is_simplicial and self.is_smooth and self.is_complete

    def to_dict(self) -> dict:
        return {
            "is_simplicial": self.is_simplicial,
            "is_smooth": self.is_smooth,
            "is_complete": self.is_complete,
            "offending_cones": [
                {"reason": reason, "indices": list(idx)} for reason, idx in self.offending_cones
            ],
        }


def cone_inward_normals(fan: Fan, cone: Sequence[int]) -> Matrix:
    """Integer rows n_k with  x in cone  <=>  n_k . x >= 0  (full-dim simplicial cone)."""
    m = fan.cone_columns(cone)
    det = determinant(m)
    if det == 0:
        raise ValueError("cone generators are linearly dependent")
    adj = adjugate(m)
    if det < 0:
        adj = tuple(tuple(-x for x in row) for row in adj)
    return adj


def _in_span_cone(gens: Sequence[Vector], v: Vector) -> bool:
    """Exact membership of v in the cone on <= 2 independent integer generators.

    Integer arithmetic only; used by the proper-intersection test where the
    common face of two maximal cones has codimension >= 1.
    """
    if not gens:
        return all(x == 0 for x in v)
    d = len(v)
    if len(gens) == 1:
        s = gens[0]
        if d == 1:
            return v[0] * s[0] > 0 or v[0] == 0
        if d == 2:
            parallel = v[0] * s[1] - v[1] * s[0] == 0
        else:
            parallel = all(x == 0 for x in cross3(v, s))
        return parallel and vdot(v, s) > 0
    if len(gens) == 2 and d == 2:
        s1, s2 = gens
        det = s1[0] * s2[1] - s1[1] * s2[0]
        if det != 0:
            a = v[0] * s2[1] - v[1] * s2[0]
            b = s1[0] * v[1] - s1[1] * v[0]
            return a * det >= 0 and b * det >= 0
    if len(gens) == 2 and d == 3:
        s1, s2 = gens
        n = cross3(s1, s2)
        if any(x != 0 for x in n):
            if vdot(n, v) != 0:
                return False
            return vdot(cross3(v, s2), n) >= 0 and vdot(cross3(s1, v), n) >= 0
    coords = solve_rational(matrix_from_columns(gens), v)
    return coords is not None and all(c >= 0 for c in coords)


def _pair_intersects_properly(
    fan: Fan, ca: Cone, cb: Cone, normals_a: Matrix, normals_b: Matrix
) -> bool:
    d = fan.dim
    common = [fan.rays[i] for i in sorted(set(ca) & set(cb))]
    rows = list(normals_a) + list(normals_b)
    seen: set[Vector] = set()
    for subset in combinations(range(len(rows)), d - 1):
        for v in kernel_directions([rows[i] for i in subset], d):
            if v in seen:
                continue
            seen.add(v)
            if all(vdot(row, v) >= 0 for row in rows):
                # v is an extreme-ray candidate of the intersection
                if not _in_span_cone(common, v):
                    return False
    return True


def validate(fan: Fan) -> ValidationReport:
    """Exact structural, smoothness and completeness checks."""
    offending: list[tuple[str, tuple[int, ...]]] = []
    n = len(fan.rays)
    used = set()
    for i, r in enumerate(fan.rays):
        if len(r) != fan.dim:
            offending.append(("ray_wrong_dimension", (i,)))
        elif all(x == 0 for x in r):
            offending.append(("zero_ray", (i,)))
        elif not is_primitive(r):
            offending.append(("non_primitive_ray", (i,)))
    for i, j in combinations(range(n), 2):
        if fan.rays[i] == fan.rays[j]:
            offending.append(("duplicate_ray", (i, j)))
    for ci, cone in enumerate(fan.max_cones):
        if any(i < 0 or i >= n for i in cone):
            offending.append(("bad_ray_index", (ci,)))
        used.update(cone)
    for ci, cj in combinations(range(len(fan.max_cones)), 2):
        if fan.max_cones[ci] == fan.max_cones[cj]:
            offending.append(("duplicate_cone", (ci, cj)))
    for i in range(n):
        if i not in used:
            offending.append(("unused_ray", (i,)))
    if offending:
        return ValidationReport(False, False, False, tuple(offending))

    is_simplicial = True
    dets = {}
    for ci, cone in enumerate(fan.max_cones):
        if len(cone) != fan.dim:
            is_simplicial = False
            offending.append(("cone_wrong_size", (ci,)))
            continue
        det = determinant(fan.cone_columns(cone))
        dets[ci] = det
        if det == 0:
            is_simplicial = False
            offending.append(("cone_degenerate", (ci,)))
        elif det not in (1, -1):
            offending.append(("cone_not_unimodular", (ci,)))
    is_smooth = is_simplicial and all(d in (1, -1) for d in dets.values())

    is_complete = False
    if is_simplicial:
        is_complete = True
        facet_count: dict[Cone, int] = {}
        for cone in fan.max_cones:
            for facet in combinations(cone, fan.dim - 1):
                facet_count[facet] = facet_count.get(facet, 0) + 1
        for ci, cone in enumerate(fan.max_cones):
            for facet in combinations(cone, fan.dim - 1):
                if facet_count[facet] != 2:
                    is_complete = False
                    offending.append(("facet_unmatched", (ci,)))
        if is_complete:
            normals = [cone_inward_normals(fan, c) for c in fan.max_cones]
            for ci, cj in combinations(range(len(fan.max_cones)), 2):
                if not _pair_intersects_properly(
                    fan, fan.max_cones[ci], fan.max_cones[cj], normals[ci], normals[cj]
                ):
                    is_complete = False
                    offending.append(("improper_intersection", (ci, cj)))
    return ValidationReport(is_simplicial, is_smooth, is_complete, tuple(offending))


def cone_contains(fan: Fan, cone: Sequence[int], v: Sequence[int], relative_interior: bool = False) -> bool:
    """Membership of a point in a (sub)cone via exact generator coordinates.

    With ``relative_interior`` every coordinate must be strictly positive;
    points outside the linear span are never contained.
    """
    gens = list(cone)
    if not gens:
        # the zero cone's relative interior is itself
        return all(x == 0 for x in v)
    coords = solve_rational(fan.cone_columns(gens), v)
    if coords is None:
        return False
    if relative_interior:
        return all(c > 0 for c in coords)
    return all(c >= 0 for c in coords)


def star(fan: Fan, ray_index: int) -> tuple[Cone, ...]:
    """Maximal cones containing the given ray."""
    if not 0 <= ray_index < len(fan.rays):
        raise ValueError(f"ray index {ray_index} out of range")
    return tuple(c for c in fan.max_cones if ray_index in c)


def quotient_fan(fan: Fan, ray_index: int) -> Fan:
    """Complete (d-1)-fan of the toric divisor at a ray: star cones modulo the ray.

    The projection basis comes from completing the ray to a basis of Z^d via
    its Smith normal form, so the result is deterministic.
    """
    if fan.dim < 2:
        raise ValueError("quotient requires dimension >= 2")
    x0 = fan.rays[ray_index]
    column = tuple((x,) for x in x0)
    u, d, _ = smith_normal_form(column)
    if d[0][0] != 1:
        raise ValueError("quotient ray is not primitive")
    star_cones = star(fan, ray_index)
    if not star_cones:
        raise ValueError(f"ray index {ray_index} not used by any cone")

    def project(v: Vector) -> Vector:
        return make_primitive(matvec(u, v)[1:])

    images: list[Vector] = []
    index_of: dict[Vector, int] = {}
    new_cones: list[Cone] = []
    for cone in star_cones:
        img_cone = []
        for i in cone:
            if i == ray_index:
                continue
            w = project(fan.rays[i])
            if w not in index_of:
                index_of[w] = len(images)
                images.append(w)
            img_cone.append(index_of[w])
        new_cones.append(tuple(sorted(img_cone)))
    # reindex rays lexicographically for a stable result
    order = sorted(range(len(images)), key=lambda i: images[i])
    remap = {old: new for new, old in enumerate(order)}
    rays = tuple(images[i] for i in order)
    cones = tuple(tuple(sorted(remap[i] for i in c)) for c in new_cones)
    return Fan(fan.dim - 1, rays, cones)


def _half_plane(v: Sequence) -> int:
    # 0 for the closed upper half starting at the positive x-axis, 1 below
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


def ccw_sorted(points: Sequence[tuple], center: Optional[tuple] = None) -> list[tuple]:
    """Sort 2D points counterclockwise around ``center`` (exact arithmetic).

    All points must be distinct from the center and pairwise non-parallel
    directions may repeat only at distinct radii; used for rays (primitive,
    pairwise distinct) and convex polygon vertices (strictly convex).
    """
    if center is None:
        center = (0, 0)

    def direction(p):
        return (p[0] - center[0], p[1] - center[1])

    def compare(p, q):
        a, b = direction(p), direction(q)
        ha, hb = _half_plane(a), _half_plane(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cross = a[0] * b[1] - a[1] * b[0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(points, key=cmp_to_key(compare))


def fan_from_rays_2d(rays: Sequence[Sequence[int]]) -> Fan:
    """Complete 2-fan on the given rays: maximal cones join angular neighbours."""
    rays = [tuple(int(x) for x in r) for r in rays]
    ordered = ccw_sorted(rays)
    index = {r: i for i, r in enumerate(rays)}
    cones = []
    for k in range(len(ordered)):
        a = index[ordered[k]]
        b = index[ordered[(k + 1) % len(ordered)]]
        cones.append(tuple(sorted((a, b))))
    return Fan(2, tuple(rays), tuple(cones))


def hirzebruch_fan(a: int) -> Fan:
    """Standard fan of the Hirzebruch surface of degree a >= 0 (a = 0 gives P1 x P1)."""
    if a < 0:
        raise ValueError("Hirzebruch degree must be nonnegative")
    return fan_from_rays_2d([(1, 0), (-1, 0), (0, 1), (a, -1)])


def projective_plane_fan() -> Fan:
    return fan_from_rays_2d([(1, 0), (0, 1), (-1, -1)])
