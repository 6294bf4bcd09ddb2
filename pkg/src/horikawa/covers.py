"""Cyclic covers of degree two and three given by reduced building data.

A cover is described by its branch divisor classes together with the
derived root class whose degree-th multiple is the weighted branch sum.
This module computes the numerical invariants of such covers, canonical
image data for double covers, and the scroll polynomial bookkeeping
(bidegrees, symmetry checks, germ classification) used to pin down the
explicit branch curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice
from .lattice import DivisorClass, SurfaceModel


class BuildingDataError(ValueError):
    """The given branch data does not define a valid cover."""


# All supported ambient surfaces are rational, so the structure constants
# of the base are fixed once and for all.
BASE_CHI = 1
BASE_PG = 0

ASSUME_Q_ZERO = "irregularity q assumed 0 per construction, not computed"
ASSUME_SMOOTH_BRANCH = (
    "branch divisors assumed smooth (at worst canonical singularities) and "
    "transversal; not verified symbolically"
)
WARN_EMPTY_BRANCH = "empty branch divisor: degenerate unramified case"

MINIMALITY_UNKNOWN = "unknown"
MINIMALITY_ASSERTED = "asserted"
NEF_CERTIFIED = "nef-certified"
AMPLE_CERTIFIED = "ample-certified"


def derive_root(degree: int, branch, base: SurfaceModel | None = None) -> DivisorClass:
    """Derive the root class of the cover from its branch classes.

    The root is the unique class whose ``degree``-th multiple equals the
    weighted sum of the branch classes (weight j for the j-th class).
    Uniqueness holds because the supported surfaces have torsion free
    Picard group.  Raises BuildingDataError when some coefficient is not
    divisible, which signals invalid building data.
    """
    if degree not in (2, 3):
        raise BuildingDataError(f"only degree 2 and 3 covers are supported, got {degree}")
    branch = tuple(branch)
    if len(branch) != degree - 1:
        raise BuildingDataError(
            f"degree {degree} needs {degree - 1} branch classes, got {len(branch)}"
        )
    if base is None:
        base = branch[0].surface
    weighted = base.zero()
    for j, d in enumerate(branch, start=1):
        if d.surface != base:
            raise BuildingDataError("branch classes must live on the base surface")
        weighted = weighted + j * d
    coeffs = []
    for c in weighted.coeffs:
        q, r = divmod(c, degree)
        if r:
            raise BuildingDataError(
                f"coefficient {c} of the weighted branch sum is not divisible by {degree}"
            )
        coeffs.append(q)
    return DivisorClass(base, tuple(coeffs))


@dataclass(frozen=True)
class CoverSpec:
    """Reduced building data of a degree 2 or degree 3 cyclic cover.

    ``root`` satisfies degree * root = sum of j * branch[j-1].  The node
    count records transversal intersections of the two degree-3 branch
    divisors that are deliberately kept unresolved.
    """

    degree: int
    base: SurfaceModel
    branch: tuple[DivisorClass, ...]
    root: DivisorClass
    smoothness_assumed: bool = True
    transversal_node_count: int = 0

    def __post_init__(self):
        if self.degree not in (2, 3):
            raise BuildingDataError(f"unsupported cover degree {self.degree}")
        if len(self.branch) != self.degree - 1:
            raise BuildingDataError("wrong number of branch classes for the degree")
        for d in self.branch:
            if d.surface != self.base:
                raise BuildingDataError("branch classes must live on the base surface")
        if self.root.surface != self.base:
            raise BuildingDataError("root class must live on the base surface")
        weighted = self.base.zero()
        for j, d in enumerate(self.branch, start=1):
            weighted = weighted + j * d
        if self.degree * self.root != weighted:
            raise BuildingDataError("root class inconsistent with the branch classes")
        if self.transversal_node_count < 0:
            raise BuildingDataError("node count must be nonnegative")
        if self.degree == 2 and self.transversal_node_count:
            raise BuildingDataError("node bookkeeping only applies to degree 3 covers")

    @classmethod
    def double(cls, base: SurfaceModel, d: DivisorClass, smoothness_assumed: bool = True
               ) -> "CoverSpec":
        return cls(2, base, (d,), derive_root(2, (d,), base), smoothness_assumed)

    @classmethod
    def triple(cls, base: SurfaceModel, d1: DivisorClass, d2: DivisorClass,
               smoothness_assumed: bool = True, transversal_node_count: int = 0
               ) -> "CoverSpec":
        return cls(3, base, (d1, d2), derive_root(3, (d1, d2), base),
                   smoothness_assumed, transversal_node_count)

    @property
    def branch_is_empty(self) -> bool:
        return all(d.is_zero for d in self.branch)


@dataclass(frozen=True)
class CanonicalMultiple:
    """A relation multiple * K = pullback of ``cls`` from the base."""

    multiple: int
    cls: DivisorClass


@dataclass(frozen=True)
class InvariantReport:
    """Numerical invariants of a constructed surface.

    ``p_g`` is None when some section count entering it is only virtual;
    a heuristic count is never reported as an invariant.
    """

    k_squared: Fraction
    chi: int
    p_g: int | None
    canonical_multiple: CanonicalMultiple
    minimal_or_ample: str = MINIMALITY_UNKNOWN
    warnings: tuple[str, ...] = ()
    assumptions: tuple[str, ...] = ()


def _optional_sections(base: SurfaceModel, classes) -> int | None:
    # None whenever any term is virtual or falls outside the supported
    # section counting (for example positive exceptional coefficients);
    # the geometric genus is then reported as unavailable, never guessed.
    total = 0
    for cls in classes:
        try:
            count = lattice.h0(base, cls)
        except ValueError:
            return None
        if not count.exact:
            return None
        total += count.value
    return total


def double_cover_invariants(spec: CoverSpec) -> InvariantReport:
    """Invariants of a smooth double cover from its building data.

    Canonical singularities on the branch are permitted; they leave every
    reported value unchanged and are recorded through the assumptions.
    """
    if spec.degree != 2:
        raise BuildingDataError("double cover invariants need a degree 2 spec")
    if not spec.smoothness_assumed:
        raise BuildingDataError("invariant formulas require the smoothness assumption")
    k = lattice.canonical_class(spec.base)
    adjoint = k + spec.root
    k_squared = 2 * adjoint.dot(adjoint)
    pairing = spec.root.dot(adjoint)
    if pairing % 2:
        raise BuildingDataError("non-integer chi: inconsistent building data")
    chi = 2 * BASE_CHI + pairing // 2
    sections = _optional_sections(spec.base, (adjoint,))
    p_g = None if sections is None else BASE_PG + sections
    warnings = (WARN_EMPTY_BRANCH,) if spec.branch_is_empty else ()
    return InvariantReport(
        k_squared=Fraction(k_squared),
        chi=chi,
        p_g=p_g,
        canonical_multiple=CanonicalMultiple(1, adjoint),
        warnings=warnings,
        assumptions=(ASSUME_SMOOTH_BRANCH, ASSUME_Q_ZERO),
    )


def triple_cover_invariants(spec: CoverSpec) -> InvariantReport:
    """Invariants of a smooth degree 3 cyclic cover from its building data.

    Requires a node-free spec; covers with retained branch nodes are
    handled by the stable surface bookkeeping.
    """
    if spec.degree != 3:
        raise BuildingDataError("triple cover invariants need a degree 3 spec")
    if spec.transversal_node_count:
        raise BuildingDataError(
            "smooth formulas need transversal_node_count = 0; resolve the nodes first"
        )
    if not spec.smoothness_assumed:
        raise BuildingDataError("invariant formulas require the smoothness assumption")
    k = lattice.canonical_class(spec.base)
    d1, d2 = spec.branch
    tri_canonical = 3 * k + 2 * d1 + 2 * d2
    square = tri_canonical.dot(tri_canonical)
    if square % 3:
        raise BuildingDataError("K^2 is not an integer: inconsistent building data")
    first = spec.root
    second = d1 + d2 - spec.root
    pairing = first.dot(k + first) + second.dot(k + second)
    if pairing % 2:
        raise BuildingDataError("non-integer chi: inconsistent building data")
    chi = 3 * BASE_CHI + pairing // 2
    sections = _optional_sections(spec.base, (k + first, k + second))
    p_g = None if sections is None else BASE_PG + sections
    warnings = (WARN_EMPTY_BRANCH,) if spec.branch_is_empty else ()
    return InvariantReport(
        k_squared=Fraction(square, 3),
        chi=chi,
        p_g=p_g,
        canonical_multiple=CanonicalMultiple(3, tri_canonical),
        warnings=warnings,
        assumptions=(ASSUME_SMOOTH_BRANCH, ASSUME_Q_ZERO),
    )


@dataclass(frozen=True)
class CanonicalImageInfo:
    """Where the canonical map of a double cover sends the surface."""

    sections: int
    system: DivisorClass
    image: SurfaceModel
    very_ample: bool
    notes: tuple[str, ...] = ()


def _very_ample(surface: SurfaceModel, d: DivisorClass) -> bool:
    if isinstance(surface, lattice.ProjectivePlane):
        return d.coeffs[0] >= 1
    if isinstance(surface, lattice.Hirzebruch):
        a, b = d.coeffs
        return a >= 1 and b > a * surface.e
    return False


def canonical_image_info(spec: CoverSpec) -> CanonicalImageInfo:
    """Canonical image data of a double cover whose base has no canonical forms.

    When h0 of the base canonical class vanishes, the canonical map of the
    cover factors through the base followed by the map given by the
    adjoint system, so the canonical image is the image of the base.
    """
    if spec.degree != 2:
        raise BuildingDataError("canonical image data is computed for double covers")
    k = lattice.canonical_class(spec.base)
    try:
        k_count = lattice.h0(spec.base, k)
    except ValueError as error:
        raise BuildingDataError(
            f"cannot evaluate h0 of the base canonical class: {error}"
        ) from error
    if not k_count.exact or k_count.value != 0:
        raise BuildingDataError(
            "canonical image factorisation needs h0 of the base canonical class to vanish"
        )
    system = k + spec.root
    count = lattice.h0(spec.base, system)
    if not count.exact:
        raise BuildingDataError("cannot certify the canonical image from a virtual count")
    notes = ["canonical map factors through the base cover map"]
    very_ample = _very_ample(spec.base, system)
    if count.value == 0:
        notes.append("empty adjoint system: degenerate case")
    elif very_ample:
        notes.append("adjoint system is very ample, image is the base surface")
    else:
        notes.append("adjoint system not certified very ample, image may degenerate")
    return CanonicalImageInfo(
        sections=count.value,
        system=system,
        image=spec.base,
        very_ample=very_ample,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class ScrollCurve:
    """A curve on a Hirzebruch surface cut out by scroll monomials.

    Monomials are exponent quadruples (c1, c2, d1, d2) for the scroll
    coordinates (t1, t2, x1, x2).  The zero scheme of a sum of such
    monomials with unit coefficients is well defined as soon as the
    monomial set is homogeneous for the scroll weights.
    """

    e: int
    monomials: frozenset[tuple[int, int, int, int]]

    def __post_init__(self):
        if self.e < 0:
            raise ValueError("scroll parameter e must be nonnegative")
        monomials = frozenset(tuple(m) for m in self.monomials)
        if not monomials:
            raise ValueError("a scroll curve needs at least one monomial")
        for m in monomials:
            if len(m) != 4 or any(x < 0 for x in m):
                raise ValueError(f"malformed exponent quadruple {m!r}")
        object.__setattr__(self, "monomials", monomials)


def scroll_class(curve: ScrollCurve) -> DivisorClass:
    """Divisor class of a scroll curve, read off the monomial weights.

    Each monomial t1^c1 t2^c2 x1^d1 x2^d2 cuts the class (d1 + d2) * D0 +
    (e*d1 + c1 + c2) * F; the set is homogeneous when all monomials give
    the same class.
    """
    classes = {_scroll_monomial_class(curve.e, m) for m in curve.monomials}
    if len(classes) != 1:
        raise ValueError(f"inhomogeneous monomial set: classes {sorted(classes)}")
    a, b = classes.pop()
    return lattice.Hirzebruch(curve.e).divisor((a, b))


def _scroll_monomial_class(e: int, monomial) -> tuple[int, int]:
    c1, c2, d1, d2 = monomial
    return (d1 + d2, e * d1 + c1 + c2)


SCALE_T1 = "scale_t1_by_primitive_root"
PERMUTE_P2 = "permute_P2_coordinates"


def invariance_check(obj, action: str) -> bool:
    """Whether a monomial set is carried to itself, up to one global character.

    ``scale_t1_by_primitive_root`` acts on a ScrollCurve by multiplying t1
    with a primitive cube root of unity: invariance means all t1 exponents
    agree modulo 3.  ``permute_P2_coordinates`` acts on a set of exponent
    triples in three variables by cyclic shift: invariance means the set
    is closed under the shift.
    """
    if action == SCALE_T1:
        if not isinstance(obj, ScrollCurve):
            raise ValueError("the t1 scaling action applies to a ScrollCurve")
        residues = {c1 % 3 for (c1, _c2, _d1, _d2) in obj.monomials}
        return len(residues) <= 1
    if action == PERMUTE_P2:
        triples = frozenset(tuple(m) for m in obj)
        for m in triples:
            if len(m) != 3 or any(x < 0 for x in m):
                raise ValueError(f"malformed exponent triple {m!r}")
        shifted = frozenset((b, c, a) for (a, b, c) in triples)
        return shifted == triples
    raise ValueError(f"unknown action {action!r}")


def classify_germ(m: int, p: int) -> str:
    """ADE type of the plane curve germ x^2 + x^m + y^p with m, p >= 2.

    For m >= 2 the x part is a unit multiple of x^2 after a change of
    coordinates, so the germ is the double point x^2 + y^p of type
    A_{p-1}.
    """
    if not (isinstance(m, int) and isinstance(p, int)):
        raise ValueError("germ exponents must be integers")
    if m < 2 or p < 2:
        raise ValueError(f"germ x^2 + x^{m} + y^{p} is outside the supported family")
    return f"A_{p - 1}"
