"""Classification data and construction pipelines on the Horikawa lines.

This module knows which (K^2, chi) pairs are admissible for minimal
surfaces of general type, how the moduli space on the line K^2 = 2chi - 6
splits into components, and how to build, with exact lattice arithmetic,
the order-3 symmetric surfaces populating each component as well as the
non-smoothable stable surfaces on the line K^2 = 2chi - 5.  Ampleness and
nefness claims are backed by integer feasibility certificates whenever
the mechanical argument closes, and downgraded to "asserted" otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import covers, lattice, stable
from .covers import CoverSpec, InvariantReport, ScrollCurve
from .lattice import DivisorClass, Hirzebruch, ProjectivePlane, SurfaceModel
from .stable import SingularityLedger, StableSurfaceRecord


class CertificateError(ValueError):
    """A positivity certificate could not be issued."""


COMPONENT_I = "I"
COMPONENT_II = "II"
UNLABELED = "unlabeled"
PARITY_INCONCLUSIVE = "inconclusive"

VERDICT_INFEASIBLE = "infeasible"
VERDICT_EXCEPTIONAL_EXCLUDED = "exceptional-case-excluded"

P2_IMAGE = "P^2"
CONE_IMAGE = "cone over a degree-4 rational curve in P^4"

NOTE_FIBER_DECOMPOSITION = (
    "genus-2 fibers over the blown-up points decompose into two (-3)-curves "
    "meeting transversally in three points"
)
NOTE_UNIQUE_FIBRATION = (
    "uniqueness of the genus-2 fibration is classification metadata, not verified here"
)
NOTE_K1_INVOLUTION = (
    "for K^2 = 8 the first-component claim additionally rests on the behaviour of "
    "the canonical involution on the pulled-back second branch curve, recorded as "
    "a case analysis rather than a lattice computation"
)
NOTE_ORDER3_SYMMETRY = "an order-3 symmetry of the branch data lifts to the cover"


def admissible(k_squared: int, chi: int) -> bool:
    """Whether the pair can occur for a minimal surface of general type."""
    return chi >= 1 and k_squared >= 1 and 2 * chi - 6 <= k_squared <= 9 * chi


@dataclass(frozen=True)
class AdmissiblePair:
    """An admissible (K^2, chi) pair."""

    k_squared: int
    chi: int

    def __post_init__(self):
        if not admissible(self.k_squared, self.chi):
            raise ValueError(f"pair (K^2, chi) = ({self.k_squared}, {self.chi}) is not admissible")


@dataclass(frozen=True)
class ComponentInfo:
    """Connected components of the moduli space at a point of the low line."""

    count: int
    labels: tuple[str, ...]
    canonical_images: dict[str, tuple[str, ...]]


def classify(k_squared: int, chi: int) -> ComponentInfo:
    """Component structure of the moduli space on the line K^2 = 2chi - 6.

    One component unless K^2 is a multiple of 8, in which case there are
    two: the first has canonical images F_e with e even up to K^2/4, the
    second F_{K^2/4 + 2} for K^2 > 8 and the plane or a quartic cone for
    K^2 = 8.
    """
    if not admissible(k_squared, chi):
        raise ValueError(f"({k_squared}, {chi}) is not an admissible pair")
    if k_squared != 2 * chi - 6:
        raise ValueError(
            f"({k_squared}, {chi}) is off the line K^2 = 2*chi - 6; no classification data"
        )
    if k_squared % 8 != 0:
        return ComponentInfo(count=1, labels=(), canonical_images={})
    quarter = k_squared // 4
    first = tuple(f"F_{e}" for e in range(0, quarter + 1, 2))
    if k_squared > 8:
        second = (f"F_{quarter + 2}",)
    else:
        second = (P2_IMAGE, CONE_IMAGE)
    return ComponentInfo(
        count=2,
        labels=(COMPONENT_I, COMPONENT_II),
        canonical_images={COMPONENT_I: first, COMPONENT_II: second},
    )


def pick_parameters(chi: int) -> tuple[int, int, int]:
    """Scroll parameter and branch degrees (e, alpha, beta) for a target chi."""
    if chi < 3:
        raise ValueError("parameter table starts at chi = 3")
    residue = chi % 3
    if residue == 0:
        return (1, chi, 3)
    if residue == 1:
        return (0, chi, 1)
    return (2, chi, 5)


@dataclass(frozen=True)
class AmplenessCertificate:
    """Integer feasibility certificate that a divisor on a blow-up is ample.

    A violating irreducible curve would pull back from a class a*D0 + b*F
    with nonnegative multiplicities at the blown-up points; pairing with a
    witness section class through those points turns the violation into
    the integer condition coefficient*a + b < 0 over a, b >= 0, a + b > 0.
    """

    divisor: DivisorClass
    self_intersection: int
    feasibility_verdict: str
    coefficient: int
    witness_class: DivisorClass
    witness_virtual_count: int
    witness_tight: bool
    exceptional_witness: tuple[int, int] | None = None
    exceptional_reason: str | None = None


@dataclass(frozen=True)
class NefCertificate:
    """Witness pairings and closure data for a nefness claim."""

    verdict: str
    divisor: DivisorClass
    pairings: tuple[tuple[str, int], ...]
    closure_coefficient: int
    gap: str | None = None


@dataclass(frozen=True)
class ConstructionRecipe:
    """A fully specified cover construction together with its outputs."""

    target: AdmissiblePair
    base: SurfaceModel
    branch: tuple[DivisorClass, ...]
    blow_up_count: int
    report: InvariantReport
    component_claim: str
    certificates: tuple = ()
    parameters: tuple[int, int, int] | None = None
    k: int | None = None
    canonical_image: str | None = None
    canonical_sections: int | None = None
    fiber_component_self_intersections: tuple[int, ...] | None = None
    scroll_curve: ScrollCurve | None = None
    germ: str | None = None
    ledger: SingularityLedger = stable.EMPTY_LEDGER
    notes: tuple[str, ...] = ()


def _first_component_branch(chi: int, general_position: bool):
    e, alpha, beta = pick_parameters(chi)
    points = 2 * alpha + 2 * beta - 4 * e
    ruled = Hirzebruch(e)
    blown = lattice.blow_up(ruled, points, general_position)
    exceptional = blown.exceptional_sum()
    d1 = lattice.pullback(blown, ruled.divisor((2, alpha))) - exceptional
    d2 = lattice.pullback(blown, ruled.divisor((2, beta))) - exceptional
    return (e, alpha, beta), ruled, blown, d1, d2


def build_component_one(chi: int, general_position: bool = True,
                        smoothness_assumed: bool = True) -> ConstructionRecipe:
    """Order-3 symmetric surface with K^2 = 2chi - 6 via a triple cover.

    Two branch curves of fiber degrees alpha and beta on a Hirzebruch
    surface meet in 2alpha + 2beta - 4e points; blowing all of them up and
    taking the cyclic triple cover branched over the strict transforms
    produces a minimal surface with the requested invariants.
    """
    if chi < 4:
        raise ValueError("the general type line K^2 = 2*chi - 6 needs chi >= 4")
    (e, alpha, beta), _ruled, blown, d1, d2 = _first_component_branch(chi, general_position)
    spec = CoverSpec.triple(blown, d1, d2, smoothness_assumed=smoothness_assumed)
    report = covers.triple_cover_invariants(spec)
    nef = nef_certificate(e, alpha, beta, general_position=general_position)
    report = replace(report, minimal_or_ample=nef.verdict)
    k_squared = 2 * chi - 6
    notes = [NOTE_FIBER_DECOMPOSITION, NOTE_UNIQUE_FIBRATION, NOTE_ORDER3_SYMMETRY]
    if k_squared % 8 == 0:
        claim = COMPONENT_I
        if chi == 7:
            notes.append(NOTE_K1_INVOLUTION)
    else:
        claim = UNLABELED
    return ConstructionRecipe(
        target=AdmissiblePair(k_squared, chi),
        parameters=(e, alpha, beta),
        base=blown,
        branch=(d1, d2),
        blow_up_count=blown.point_count,
        report=report,
        component_claim=claim,
        certificates=(nef,),
        fiber_component_self_intersections=(-3, -3),
        notes=tuple(notes),
    )


def parity_discriminator(self_intersections) -> str:
    """Discriminate components from genus-2 fiber component self-intersections.

    In the second component every such self-intersection is even, so one
    odd value excludes it and certifies the first component; all-even data
    is inconclusive.
    """
    if any(value % 2 != 0 for value in self_intersections):
        return COMPONENT_I
    return PARITY_INCONCLUSIVE


def scroll_family_curve(residue: int, k: int) -> ScrollCurve:
    """Branch curve of the family indexed by ``residue`` at parameter k.

    All three families have class 5*D0 + (10k + 10)*F on the scroll with
    parameter 2k + 2; they differ in the middle monomial, whose t1
    exponent is divisible by 3 exactly when k is congruent to the family
    residue modulo 3.
    """
    if residue not in (0, 1, 2):
        raise ValueError("family residue must be 0, 1 or 2")
    if k < 2:
        raise ValueError("the scroll branch curves are defined for k >= 2")
    top = 10 * k + 10
    if residue == 2:
        middle = (top, 0, 0, 5)
    elif residue == 0:
        middle = (top - 1, 1, 0, 5)
    else:
        middle = (top - 2, 2, 0, 5)
    return ScrollCurve(
        e=2 * k + 2,
        monomials=frozenset({(0, 0, 5, 0), middle, (0, top, 0, 5)}),
    )


def component_two_scroll_curve(k: int) -> ScrollCurve:
    """The branch curve matching k's own residue class.

    Its middle monomial keeps every t1 exponent divisible by 3, so the
    curve is invariant under scaling t1 by a cube root of unity.  For
    k = 1 mod 3 the curve acquires one double point germ of type A_4; in
    the other residue classes it is smooth.
    """
    return scroll_family_curve(k % 3, k)


P2_BRANCH_MONOMIALS = frozenset({(10, 0, 0), (0, 10, 0), (0, 0, 10)})


def build_component_two(k: int, smoothness_assumed: bool = True) -> ConstructionRecipe:
    """Order-3 symmetric surface in the second component at K^2 = 8k.

    For k = 1 this is the double cover of the plane branched over a
    cyclically symmetric degree 10 curve.  For k >= 2 it is the double
    cover of the scroll with parameter 2k + 2 branched over the negative
    section plus the residue-selected curve of class 5*D0 + (10k + 10)*F.
    """
    if k < 1:
        raise ValueError("the second component exists for k >= 1")
    if k == 1:
        plane = ProjectivePlane()
        branch = plane.divisor((10,))
        spec = CoverSpec.double(plane, branch, smoothness_assumed=smoothness_assumed)
        report = covers.double_cover_invariants(spec)
        image = covers.canonical_image_info(spec)
        if not covers.invariance_check(P2_BRANCH_MONOMIALS, covers.PERMUTE_P2):
            raise CertificateError("plane branch curve lost its cyclic symmetry")
        if report.canonical_multiple.cls.coeffs[0] < 1:
            raise CertificateError("adjoint class on the plane is not ample")
        report = replace(report, minimal_or_ample=covers.AMPLE_CERTIFIED)
        return ConstructionRecipe(
            target=AdmissiblePair(8, 7),
            k=1,
            base=plane,
            branch=(branch,),
            blow_up_count=0,
            report=report,
            component_claim=COMPONENT_II,
            canonical_image=lattice.surface_descriptor(image.image),
            canonical_sections=image.sections,
            notes=(NOTE_ORDER3_SYMMETRY,)
            + ("canonical system embeds the plane by conics",),
        )
    curve = component_two_scroll_curve(k)
    curve_class = covers.scroll_class(curve)
    ruled = Hirzebruch(2 * k + 2)
    branch = ruled.negative_section() + curve_class
    spec = CoverSpec.double(ruled, branch, smoothness_assumed=smoothness_assumed)
    report = covers.double_cover_invariants(spec)
    if not covers.invariance_check(curve, covers.SCALE_T1):
        raise CertificateError("scroll branch curve lost its order-3 symmetry")
    image = covers.canonical_image_info(spec)
    germ = None
    ledger = stable.EMPTY_LEDGER
    notes = [NOTE_ORDER3_SYMMETRY]
    if k % 3 == 1:
        # Local form of the unique branch curve singularity on the chart
        # where the curve reads x1^5 + t2^2 + t2^(10k+10).
        germ = covers.classify_germ(10 * k + 10, 5)
        ledger = SingularityLedger(canonical_count=1)
        notes.append(
            f"branch curve carries one {germ} double point; the cover has at worst "
            "one rational double point and all reported invariants are unchanged"
        )
    else:
        notes.append("branch curve smooth in this residue class (declared input)")
    # K is the pullback of the adjoint class under a finite cover, so its
    # ampleness follows from ampleness of the adjoint class on the scroll.
    if not _ample_on_hirzebruch(ruled, report.canonical_multiple.cls):
        raise CertificateError("adjoint class on the scroll is not ample")
    report = replace(report, minimal_or_ample=covers.AMPLE_CERTIFIED)
    return ConstructionRecipe(
        target=AdmissiblePair(8 * k, 4 * k + 3),
        k=k,
        base=ruled,
        branch=(branch,),
        blow_up_count=0,
        report=report,
        component_claim=COMPONENT_II,
        canonical_image=lattice.surface_descriptor(image.image),
        canonical_sections=image.sections,
        scroll_curve=curve,
        germ=germ,
        ledger=ledger,
        notes=tuple(notes),
    )


def _ample_on_hirzebruch(surface: Hirzebruch, d: DivisorClass) -> bool:
    a, b = d.coeffs
    return a >= 1 and b > a * surface.e


def ampleness_certificate(e: int, alpha: int, beta: int,
                          general_position: bool = True) -> AmplenessCertificate:
    """Certify ampleness of the stable construction's tri-canonical divisor.

    The divisor lives on the blow-up of the scroll at all but three of the
    branch intersection points.  Its self-intersection must be positive,
    and a section-class witness through the blown-up points must exist
    (virtual count at least one).  The feasibility condition
    (alpha + beta - 3e - 4)*a + b < 0 then has no admissible solution
    except possibly the negative section (a, b) = (1, 0), which general
    position excludes.
    """
    points = 2 * alpha + 2 * beta - 4 * e - 3
    if points < 1:
        raise CertificateError("parameter triple leaves no points to blow up")
    ruled = Hirzebruch(e)
    blown = lattice.blow_up(ruled, points, general_position)
    exceptional = blown.exceptional_sum()
    divisor = (
        lattice.pullback(blown, ruled.divisor((2, 2 * alpha + 2 * beta - 3 * e - 6)))
        - exceptional
    )
    square = divisor.dot(divisor)
    if square <= 0:
        raise CertificateError(f"divisor self-intersection {square} is not positive")
    witness_base = ruled.divisor((1, alpha + beta - e - 2))
    witness = lattice.pullback(blown, witness_base) - exceptional
    witness_count = lattice.h0(blown, witness)
    if witness_count.value < 1:
        raise CertificateError(
            "witness section class through the blown-up points is unavailable"
        )
    coefficient = alpha + beta - 3 * e - 4
    if coefficient >= 0:
        return AmplenessCertificate(
            divisor=divisor,
            self_intersection=square,
            feasibility_verdict=VERDICT_INFEASIBLE,
            coefficient=coefficient,
            witness_class=witness,
            witness_virtual_count=witness_count.value,
            witness_tight=witness_count.value == 1,
        )
    # Feasible case: irreducible classes a*D0 + b*F with a, b >= 0 satisfy
    # b >= a*e unless they are the fiber or the negative section.  The
    # fiber never violates, and when coefficient + e >= 0 neither does any
    # section class, leaving the negative section as the only candidate.
    if coefficient + e < 0:
        raise CertificateError(
            "cannot reduce the feasible region to the negative section alone"
        )
    if not general_position:
        raise CertificateError(
            "excluding the negative section requires the general position assumption"
        )
    return AmplenessCertificate(
        divisor=divisor,
        self_intersection=square,
        feasibility_verdict=VERDICT_EXCEPTIONAL_EXCLUDED,
        coefficient=coefficient,
        witness_class=witness,
        witness_virtual_count=witness_count.value,
        witness_tight=witness_count.value == 1,
        exceptional_witness=(1, 0),
        exceptional_reason=(
            "the negative section is a fixed irreducible curve and cannot pass "
            "through blown-up points in general position"
        ),
    )


def nef_certificate(e: int, alpha: int, beta: int,
                    general_position: bool = True) -> NefCertificate:
    """Certify nefness of the tri-canonical divisor of the minimal construction.

    The divisor pairs nonnegatively with the explicit witness classes
    (exceptional curves, fibers through blown-up points, both branch
    curves, and the negative section when e > 0).  For every other
    irreducible curve, pairing its preimage class with the first branch
    curve, which passes through every blown-up point with multiplicity
    one, bounds the multiplicity sum and closes the feasibility analysis
    whenever alpha + 2beta - 3e - 6 >= 0.  Any failing step downgrades the
    verdict to "asserted" with the gap recorded.
    """
    points = 2 * alpha + 2 * beta - 4 * e
    if points < 1:
        raise CertificateError("parameter triple admits no blown-up points")
    ruled = Hirzebruch(e)
    blown = lattice.blow_up(ruled, points, general_position)
    exceptional = blown.exceptional_sum()

    def pull(a, b):
        return lattice.pullback(blown, ruled.divisor((a, b)))

    divisor = pull(2, 2 * alpha + 2 * beta - 3 * e - 6) - exceptional
    d1 = pull(2, alpha) - exceptional
    d2 = pull(2, beta) - exceptional
    first_exceptional = blown.exceptional(1)
    pairings = [
        ("exceptional curve", divisor.dot(first_exceptional)),
        ("fiber through a blown-up point", divisor.dot(pull(0, 1) - first_exceptional)),
        ("first branch curve", divisor.dot(d1)),
        ("second branch curve", divisor.dot(d2)),
    ]
    if e > 0:
        # In general position no blown-up point lies on the negative
        # section, so its strict transform is the plain pullback.
        pairings.append(("negative section", divisor.dot(pull(1, 0))))
    closure = alpha + 2 * beta - 3 * e - 6
    gap = None
    if any(value < 0 for _name, value in pairings):
        gap = "a witness pairing is negative"
    elif closure < 0:
        gap = (
            f"multiplicity bound through the first branch curve leaves the "
            f"coefficient {closure} negative; no mechanical closure"
        )
    elif e > 0 and not general_position:
        gap = "negative section witness needs the general position assumption"
    verdict = covers.NEF_CERTIFIED if gap is None else covers.MINIMALITY_ASSERTED
    return NefCertificate(
        verdict=verdict,
        divisor=divisor,
        pairings=tuple(pairings),
        closure_coefficient=closure,
        gap=gap,
    )


class StableConstruction:
    """Result of the stable pipeline: the surface record plus its recipe."""

    def __init__(self, record: StableSurfaceRecord, recipe: ConstructionRecipe):
        self.record = record
        self.recipe = recipe

    def __iter__(self):
        return iter((self.record, self.recipe))

    def __eq__(self, other):
        return (
            isinstance(other, StableConstruction)
            and self.record == other.record
            and self.recipe == other.recipe
        )

    def __repr__(self):
        return f"StableConstruction(record={self.record!r}, recipe={self.recipe!r})"


def build_stable(chi: int, general_position: bool = True,
                 smoothness_assumed: bool = True) -> StableConstruction:
    """Non-smoothable stable surface with K^2 = 2chi - 5.

    Identical branch data to the minimal construction, but three of the
    branch intersection points are left alone; the triple cover then
    carries three one-third quotient points, its canonical class is ample
    by certificate, and its bicanonical count shows that its moduli
    component contains no canonical models.
    """
    if chi < 3:
        raise ValueError("the stable line K^2 = 2*chi - 5 needs chi >= 3")
    e, alpha, beta = pick_parameters(chi)
    points = 2 * alpha + 2 * beta - 4 * e - 3
    ruled = Hirzebruch(e)
    blown = lattice.blow_up(ruled, points, general_position)
    exceptional = blown.exceptional_sum()
    d1 = lattice.pullback(blown, ruled.divisor((2, alpha))) - exceptional
    d2 = lattice.pullback(blown, ruled.divisor((2, beta))) - exceptional
    spec = CoverSpec.triple(
        blown, d1, d2,
        smoothness_assumed=smoothness_assumed,
        transversal_node_count=3,
    )
    resolution = stable.resolve_node_bookkeeping(spec)
    record = resolution.unresolved
    certificate = ampleness_certificate(e, alpha, beta, general_position=general_position)
    record.ample_canonical = True
    stable.h0_2K(record)
    recipe = ConstructionRecipe(
        target=AdmissiblePair(2 * chi - 5, chi),
        parameters=(e, alpha, beta),
        base=blown,
        branch=(d1, d2),
        blow_up_count=points,
        report=resolution.resolved,
        component_claim=UNLABELED,
        certificates=(certificate,),
        ledger=record.ledger,
        notes=(
            "three branch intersection points kept unresolved, one one-third "
            "quotient point over each",
            "the recorded report describes the canonical resolution; the stable "
            "surface data lives in the accompanying record",
        ),
    )
    return StableConstruction(record, recipe)


def epsilon_family(chi: int, epsilon: int) -> StableSurfaceRecord:
    """Contract 3*epsilon disjoint (-3)-curves of the minimal construction.

    Requires 1 <= 3*epsilon <= 2chi + 2, the number of available curves.
    The result has K^2 = 2chi - 6 + epsilon, which satisfies
    3K^2 <= 8chi - 16 with equality exactly at the top of the range.
    """
    if chi < 4:
        raise ValueError("the contracted family starts from a surface with chi >= 4")
    if epsilon < 1:
        raise ValueError("at least one triple of curves must be contracted")
    if 3 * epsilon > 2 * chi + 2:
        raise ValueError(
            f"only {2 * chi + 2} disjoint (-3)-curves are available, "
            f"cannot contract {3 * epsilon}"
        )
    record = stable.contract_minus3(chi, 2 * chi - 6, 3 * epsilon)
    if 3 * record.k_squared > 8 * chi - 16:
        raise CertificateError("contracted surface violates the stable line bound")
    stable.h0_2K(record)
    return record
