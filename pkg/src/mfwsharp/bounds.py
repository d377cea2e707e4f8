"""Degree bounds on the HOMFLY-PT polynomial and the quantities they control."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .diagram import DiagramError, LinkDiagram, canonical_key
from .laurent import LaurentPoly2
from .resolution import homfly
from .seifert import SeifertStructure

_POLY_CACHE: dict[tuple, LaurentPoly2] = {}


def cached_homfly(D: LinkDiagram, engine: str = "coherent") -> LaurentPoly2:
    key = (engine, canonical_key(D))
    hit = _POLY_CACHE.get(key)
    if hit is None:
        hit = homfly(D, engine)
        _POLY_CACHE[key] = hit
    return hit


@dataclass(frozen=True)
class Bound:
    """One inequality ``lhs <= rhs``; a missing ``lhs`` holds vacuously."""

    lhs: float | None
    rhs: float

    @property
    def holds(self) -> bool:
        return self.lhs is None or self.lhs <= self.rhs

    @property
    def sharp(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class BoundsReport:
    crossings: int
    writhe: int
    seifert_circles: int
    components: int
    deg_z_max: int
    deg_a_max: int
    deg_a_min: int
    conway_deg_z_max: int | None  # None when the Conway polynomial vanishes
    upper: Bound
    left: Bound
    right: Bound
    left_right: Bound
    crossing_number: Bound
    conway_genus: Bound
    self_linking: int
    braid_index_lower: float
    canonical_genus_doubled: int

    @property
    def all_hold(self) -> bool:
        return all(b.holds for b in self.bounds().values())

    def bounds(self) -> dict[str, Bound]:
        return {
            "U": self.upper,
            "L": self.left,
            "R": self.right,
            "LR": self.left_right,
            "MFW": self.crossing_number,
            "U_prime": self.conway_genus,
        }

    def to_json(self) -> dict:
        doc = {k: v for k, v in asdict(self).items() if not isinstance(v, dict)}
        doc["bounds"] = {
            k: {"lhs": b.lhs, "rhs": b.rhs, "holds": b.holds, "sharp": b.sharp}
            for k, b in self.bounds().items()
        }
        return doc


def bounds_report(D: LinkDiagram, engine: str = "coherent", P: LaurentPoly2 | None = None) -> BoundsReport:
    P = cached_homfly(D, engine) if P is None else P
    deg = P.degrees()
    S = SeifertStructure(D)
    cr, w, s, nl = D.crossing_count, D.writhe, S.count, D.component_count
    conway = P.substitute_a_one()
    cz = conway.degrees()["deg_z_max"] if conway else None
    genus2 = 2 - nl + cr - s
    zmax, amax, amin = deg["deg_z_max"], deg["deg_a_max"], deg["deg_a_min"]
    return BoundsReport(
        crossings=cr,
        writhe=w,
        seifert_circles=s,
        components=nl,
        deg_z_max=zmax,
        deg_a_max=amax,
        deg_a_min=amin,
        conway_deg_z_max=cz,
        upper=Bound(zmax, cr - s + 1),
        left=Bound(w - s + 1, amin),
        right=Bound(amax, w + s - 1),
        left_right=Bound((amax - amin) / 2 + 1, s),
        crossing_number=Bound(zmax + (amax - amin) / 2, cr),
        conway_genus=Bound(None if cz is None else cz - nl + 1, genus2),
        self_linking=w - s,
        braid_index_lower=(amax - amin) / 2 + 1,
        canonical_genus_doubled=genus2,
    )


@dataclass(frozen=True)
class PositiveEqualities:
    upper_sharp: bool
    left_sharp: bool
    conway_matches_genus: bool  # conway degree - #L + 1 == 2g
    conway_matches_half_genus: bool  # the same quantity against g itself

    @property
    def ok(self) -> bool:
        return self.upper_sharp and self.left_sharp

    def to_json(self) -> dict:
        return {**asdict(self), "ok": self.ok}


def positive_equalities_check(D: LinkDiagram, engine: str = "coherent", strict: bool = True) -> PositiveEqualities:
    """Check that a positive diagram realises the upper and left bounds.

    Also records how the Conway degree compares with the canonical genus,
    both against ``2g`` and against ``g``; neither comparison is enforced.
    """
    if not D.is_positive:
        raise DiagramError("diagram is not positive")
    r = bounds_report(D, engine)
    val = None if r.conway_deg_z_max is None else r.conway_deg_z_max - r.components + 1
    out = PositiveEqualities(
        r.upper.sharp,
        r.left.sharp,
        val == r.canonical_genus_doubled,
        val is not None and 2 * val == r.canonical_genus_doubled,
    )
    if strict and not out.ok:
        raise AssertionError(f"positive diagram misses a guaranteed equality: {out}")
    return out
