"""Hard-coded constructors for every named fan: the 16 smooth toric weak del
Pezzo surfaces, the 15 toric weakened Fano 3-folds, and a few auxiliary
3-folds used as counterexamples in tests and CLI examples.

Names are ASCII: W4_1 stands for the first Picard-rank-4 weak surface
(superscript index, subscript rank in the usual notation), X3_0 for the
rank-3 weakened 3-fold whose exceptional divisors are P1 x P1 (a = 0), and
X4_1/X5_1 for the two F1-type (a = 1) bundles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classify import BundleSpec, build_bundle, product_with_p1
from .fan import Fan, fan_from_rays_2d

# Generator lists of the 16 smooth toric weak del Pezzo surfaces.
# S_n is the del Pezzo surface of degree n; W fans are weak but not Fano.
_SURFACE_RAYS: dict[str, list[tuple[int, int]]] = {
    "P2": [(1, 0), (0, 1), (-1, -1)],
    "P1xP1": [(1, 0), (-1, 0), (0, 1), (0, -1)],
    "F1": [(1, 0), (-1, 0), (0, 1), (1, -1)],
    "F2": [(1, 0), (-1, 0), (1, 1), (1, -1)],
    "S7": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1)],
    "W3": [(1, 0), (-1, 0), (1, 1), (1, -1), (0, 1)],
    "S6": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)],
    "W4_1": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1)],
    "W4_2": [(1, 0), (-1, 0), (1, 1), (1, -1), (0, 1), (-1, 1)],
    "W4_3": [(1, 0), (-1, 0), (1, 1), (1, -1), (0, 1), (1, 2)],
    "W5_1": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1)],
    "W5_2": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (1, -2)],
    "W6_1": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)],
    "W6_2": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (1, -2), (-1, 1)],
    "W6_3": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (1, 2), (1, -2)],
    "W7": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (1, -2), (-1, 1), (-2, 1)],
}

_FANO_SURFACES = {"P2", "P1xP1", "F1", "S7", "S6"}

# Fiber presentations and section twists of the four non-product weakened
# 3-folds, in fiber (+) base coordinates. Rebased from the generator lists
# in which they are usually written: the fiber plane is spanned by the
# exceptional ray and the two rays completing its star.
_BUNDLE_DATA: dict[str, tuple[list[tuple[int, int]], tuple[int, int], tuple[int, int], str]] = {
    "X3_0": ([(1, 0), (0, 1), (0, -1), (-1, 1)], (1, 0), (1, 0), "F1"),
    "X4_0": ([(1, 0), (0, 1), (0, -1), (-1, 1), (-1, 0)], (1, 0), (1, 0), "S7"),
    "X4_1": ([(1, 0), (1, 1), (1, -1), (0, 1), (-1, 0)], (0, 0), (0, 1), "W3"),
    "X5_1": ([(1, 0), (1, 1), (1, -1), (0, 1), (-1, 0), (0, -1)], (0, 0), (0, 1), "W4_1"),
}

_SPECIAL_DEGREES = {"X3_0": 52, "X4_0": 38, "X4_1": 46, "X5_1": 36}

_PRODUCT_FIBERS = [
    "F2", "W3", "W4_1", "W4_2", "W4_3", "W5_1", "W5_2", "W6_1", "W6_2", "W6_3", "W7",
]


@dataclass(frozen=True)
class NamedFan:
    name: str
    fan: Fan
    expected: dict


@lru_cache(maxsize=None)
def surfaces() -> tuple[NamedFan, ...]:
    """The 16 smooth toric weak del Pezzo surfaces."""
    out = []
    for name, rays in _SURFACE_RAYS.items():
        fan = fan_from_rays_2d(rays)
        out.append(
            NamedFan(
                name,
                fan,
                {
                    "rays": len(rays),
                    "picard": len(rays) - 2,
                    "degree": 12 - len(rays),
                    "fano": name in _FANO_SURFACES,
                    "weak_fano": True,
                },
            )
        )
    return tuple(out)


def surface(name: str) -> NamedFan:
    for nf in surfaces():
        if nf.name == name:
            return nf
    raise KeyError(f"unknown surface {name!r}")


@lru_cache(maxsize=None)
def threefolds() -> tuple[NamedFan, ...]:
    """The 15 toric weakened Fano 3-folds: 11 products P1 x W, then the four bundles."""
    out = []
    for fiber_name in _PRODUCT_FIBERS:
        fiber = surface(fiber_name)
        fan = product_with_p1(fiber.fan)
        n = fiber.expected["rays"]
        out.append(
            NamedFan(
                f"P1x{fiber_name}",
                fan,
                {
                    "rays": n + 2,
                    "picard": n - 1,
                    "degree": 6 * (12 - n),
                    "fiber": fiber_name,
                    "fiber_rays": n,
                    "weakened": True,
                },
            )
        )
    for name, (fiber_rays, twist_plus, twist_minus, fiber_name) in _BUNDLE_DATA.items():
        fiber = fan_from_rays_2d(fiber_rays)
        fan = build_bundle(BundleSpec(fiber, twist_plus, twist_minus))
        if fan is None:
            raise AssertionError(f"catalog bundle {name} failed to validate")
        out.append(
            NamedFan(
                name,
                fan,
                {
                    "rays": len(fiber_rays) + 2,
                    "picard": len(fiber_rays) - 1,
                    "degree": _SPECIAL_DEGREES[name],
                    "fiber": fiber_name,
                    "fiber_rays": len(fiber_rays),
                    "weakened": True,
                },
            )
        )
    return tuple(out)


@lru_cache(maxsize=None)
def extras() -> tuple[NamedFan, ...]:
    """Auxiliary 3-folds: two Fano products and the weak-Fano-but-not-weakened
    P1-bundle over P2 whose crepant contraction collapses a divisor to a point."""
    p1p1p1 = product_with_p1(surface("P1xP1").fan)
    p1s6 = product_with_p1(surface("S6").fan)
    pp2 = Fan(
        3,
        ((1, 0, 0), (0, 1, 0), (-1, -1, 3), (0, 0, 1), (0, 0, -1)),
        ((0, 1, 3), (1, 2, 3), (0, 2, 3), (0, 1, 4), (1, 2, 4), (0, 2, 4)),
    )
    return (
        NamedFan("P1xP1xP1", p1p1p1, {"rays": 6, "picard": 3, "degree": 48, "fano": True, "weakened": False}),
        NamedFan("P1xS6", p1s6, {"rays": 8, "picard": 5, "degree": 36, "fano": True, "weakened": False}),
        NamedFan(
            "PP2_O_O3",
            pp2,
            {"rays": 5, "picard": 2, "fano": False, "weak_fano": True, "weakened": False},
        ),
    )


@lru_cache(maxsize=None)
def all_named() -> dict[str, NamedFan]:
    out: dict[str, NamedFan] = {}
    for group in (surfaces(), threefolds(), extras()):
        for nf in group:
            out[nf.name] = nf
    return out


def named_fan(name: str) -> NamedFan:
    try:
        return all_named()[name]
    except KeyError:
        raise KeyError(f"unknown catalog name {name!r}") from None
