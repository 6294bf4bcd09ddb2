"""Self-contained identity suite over the construction pipelines.

Every check recomputes its expected values from scratch (closed formulas,
independent enumerations) instead of trusting the pipeline outputs, so a
single wrong coefficient anywhere in the calculus surfaces as a named
failing identity.  The suite is deterministic: fixed seeds, fixed check
order, no environment dependence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import catalog, covers, lattice, stable
from .lattice import DivisorClass, Hirzebruch, ProjectivePlane


@dataclass(frozen=True)
class CheckResult:
    name: str
    identity: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationOutcome:
    chi_max: int
    k_max: int
    fault: str | None
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None


class _CheckFailure(Exception):
    pass


def _expect(condition: bool, detail: str):
    if not condition:
        raise _CheckFailure(detail)


# ---------------------------------------------------------------------------
# independent oracles

def _enumerate_scroll_sections(e: int, a: int, b: int) -> int:
    """Count monomials t1^c1 t2^c2 x1^d1 x2^d2 of class a*D0 + b*F directly."""
    count = 0
    for d1 in range(0, a + 1):
        for c1 in range(0, b + 1):
            c2 = b - e * d1 - c1
            if c2 >= 0:
                count += 1
    return count


def _enumerate_plane_sections(d: int) -> int:
    count = 0
    for i in range(0, d + 1):
        for j in range(0, d - i + 1):
            count += 1
    return count


def _sample_surfaces():
    plane = ProjectivePlane()
    return (
        plane,
        Hirzebruch(0),
        Hirzebruch(1),
        Hirzebruch(3),
        lattice.blow_up(Hirzebruch(2), 4),
        lattice.blow_up(plane, 3),
        lattice.blow_up(lattice.blow_up(Hirzebruch(1), 2), 3),
    )


def _random_class(rng: random.Random, surface) -> DivisorClass:
    rank = lattice.picard_rank(surface)
    return surface.divisor(tuple(rng.randint(-10, 10) for _ in range(rank)))


# ---------------------------------------------------------------------------
# checks

def _check_symmetry_bilinearity(chi_max, k_max, pairs=400):
    rng = random.Random(20260808)
    surfaces = _sample_surfaces()
    for n in range(pairs):
        surface = surfaces[n % len(surfaces)]
        a = _random_class(rng, surface)
        b = _random_class(rng, surface)
        c = _random_class(rng, surface)
        m = rng.randint(-6, 6)
        _expect(a.dot(b) == b.dot(a), f"pairing not symmetric on {surface.describe()}")
        _expect(
            (a + b).dot(c) == a.dot(c) + b.dot(c),
            f"pairing not additive on {surface.describe()}",
        )
        _expect(
            (m * a).dot(b) == m * a.dot(b),
            f"pairing not homogeneous on {surface.describe()}",
        )


def _check_pullback_isometry(chi_max, k_max):
    rng = random.Random(1729)
    for e in (0, 1, 2, 4):
        ruled = Hirzebruch(e)
        for n in (1, 5, 17):
            blown = lattice.blow_up(ruled, n)
            for _ in range(30):
                d1 = _random_class(rng, ruled)
                d2 = _random_class(rng, ruled)
                p1 = lattice.pullback(blown, d1)
                p2 = lattice.pullback(blown, d2)
                _expect(p1.dot(p2) == d1.dot(d2), f"pullback not isometric on F_{e} + {n}")
                _expect(
                    p1.dot(blown.exceptional(1)) == 0,
                    "pullback not orthogonal to exceptional classes",
                )


def _check_canonical_squares(chi_max, k_max):
    _expect(lattice.canonical_class(ProjectivePlane()).square() == 9,
            "plane canonical square is not 9")
    for e in range(0, 7):
        _expect(lattice.canonical_class(Hirzebruch(e)).square() == 8,
                f"F_{e} canonical square is not 8")
    for n in (1, 2, 7, 40):
        blown = lattice.blow_up(Hirzebruch(1), n)
        _expect(lattice.canonical_class(blown).square() == 8 - n,
                f"canonical square does not drop by {n} under {n} blow-ups")


def _check_section_count_oracle(chi_max, k_max, e_max=4, a_max=4, b_max=12):
    for e in range(0, e_max + 1):
        ruled = Hirzebruch(e)
        for a in range(0, a_max + 1):
            for b in range(0, b_max + 1):
                got = lattice.h0(ruled, ruled.divisor((a, b)))
                want = _enumerate_scroll_sections(e, a, b)
                _expect(got.exact and got.value == want,
                        f"h0 on F_{e} of ({a},{b}) gave {got.value}, enumeration gives {want}")
    plane = ProjectivePlane()
    for d in range(0, 9):
        got = lattice.h0(plane, plane.divisor((d,)))
        want = _enumerate_plane_sections(d)
        _expect(got.value == want, f"h0 on the plane of degree {d} disagrees with enumeration")


def _check_section_count_monotone(chi_max, k_max):
    for e in range(0, 4):
        ruled = Hirzebruch(e)
        for a in range(0, 4):
            for b in range(0, 12):
                lo = lattice.h0(ruled, ruled.divisor((a, b))).value
                hi = lattice.h0(ruled, ruled.divisor((a, b + 1))).value
                _expect(hi >= lo, f"h0 not monotone in the fiber degree on F_{e}")


def _check_parameter_table(chi_max, k_max):
    for chi in range(4, chi_max + 1):
        e, alpha, beta = catalog.pick_parameters(chi)
        _expect((alpha + 2 * beta) % 3 == 0,
                f"weighted branch degree not divisible by 3 at chi = {chi}")
        ruled = Hirzebruch(e)
        blown = lattice.blow_up(ruled, 2 * alpha + 2 * beta - 4 * e)
        exc = blown.exceptional_sum()
        d1 = lattice.pullback(blown, ruled.divisor((2, alpha))) - exc
        d2 = lattice.pullback(blown, ruled.divisor((2, beta))) - exc
        root = covers.derive_root(3, (d1, d2))
        _expect(3 * root == d1 + 2 * d2, f"root class round trip failed at chi = {chi}")


def _check_component_one_invariants(chi_max, k_max):
    for chi in range(4, chi_max + 1):
        recipe = catalog.build_component_one(chi)
        report = recipe.report
        _expect(report.k_squared == 2 * chi - 6,
                f"K^2 = {report.k_squared} instead of {2 * chi - 6} at chi = {chi}")
        _expect(report.chi == chi, f"chi = {report.chi} instead of {chi}")
        _expect(report.p_g == chi - 1,
                f"p_g = {report.p_g} instead of chi - 1 = {chi - 1} at chi = {chi}")
        cls = report.canonical_multiple.cls
        _expect(3 * report.k_squared == cls.dot(cls),
                f"3*K^2 differs from the tri-canonical square at chi = {chi}")


def _check_tricanonical_identity(chi_max, k_max):
    for chi in range(4, chi_max + 1):
        recipe = catalog.build_component_one(chi)
        e, alpha, beta = recipe.parameters
        fiber = lattice.pullback(recipe.base, Hirzebruch(e).fiber())
        alt = (alpha + 2 * beta - 3 * e - 6) * fiber + recipe.branch[0]
        _expect(recipe.report.canonical_multiple.cls == alt,
                f"tri-canonical class disagrees with its fiber form at chi = {chi}")


def _check_component_two_invariants(chi_max, k_max):
    for k in range(1, k_max + 1):
        recipe = catalog.build_component_two(k)
        report = recipe.report
        _expect((report.k_squared, report.chi) == (8 * k, 4 * k + 3),
                f"invariants {(report.k_squared, report.chi)} at k = {k}")
        _expect(report.p_g == 4 * k + 2, f"p_g = {report.p_g} at k = {k}")
        if k == 1:
            _expect(recipe.canonical_image == "P^2", "canonical image at k = 1 is not the plane")
            continue
        ruled = Hirzebruch(2 * k + 2)
        _expect(2 * report.canonical_multiple.cls == ruled.divisor((2, 6 * k + 2)),
                f"bicanonical class wrong at k = {k}")
        _expect(covers.scroll_class(recipe.scroll_curve) == ruled.divisor((5, 10 * k + 10)),
                f"branch curve class wrong at k = {k}")
        _expect(covers.invariance_check(recipe.scroll_curve, covers.SCALE_T1),
                f"branch curve not symmetric at k = {k}")
        if k % 3 == 1:
            _expect(recipe.germ == "A_4", f"germ {recipe.germ} at k = {k}")
        else:
            _expect(recipe.germ is None, f"unexpected germ at k = {k}")


def _check_scroll_symmetry_residues(chi_max, k_max):
    for k in range(2, max(k_max, 5) + 1):
        for residue in (0, 1, 2):
            curve = catalog.scroll_family_curve(residue, k)
            expected = residue == k % 3
            got = covers.invariance_check(curve, covers.SCALE_T1)
            _expect(got == expected,
                    f"symmetry check gave {got} for the residue {residue} family at k = {k}")


def _check_classification(chi_max, k_max):
    for chi in range(4, chi_max + 1):
        k_squared = 2 * chi - 6
        info = catalog.classify(k_squared, chi)
        expected = 2 if k_squared % 8 == 0 else 1
        _expect(info.count == expected,
                f"component count {info.count} instead of {expected} at chi = {chi}")
        if expected == 2:
            quarter = k_squared // 4
            if k_squared > 8:
                _expect(info.canonical_images["II"] == (f"F_{quarter + 2}",),
                        f"second component image wrong at chi = {chi}")
            else:
                _expect(info.canonical_images["II"] == (catalog.P2_IMAGE, catalog.CONE_IMAGE),
                        "second component images wrong at K^2 = 8")
    for k in range(1, k_max + 1):
        recipe = catalog.build_component_two(k)
        info = catalog.classify(8 * k, 4 * k + 3)
        _expect(recipe.canonical_image in info.canonical_images["II"],
                f"constructed canonical image not among the classified ones at k = {k}")


def _check_parity_discriminator(chi_max, k_max):
    _expect(catalog.parity_discriminator([-3, -3]) == catalog.COMPONENT_I,
            "odd self-intersections must certify the first component")
    _expect(catalog.parity_discriminator([-2, -2, 0]) == catalog.PARITY_INCONCLUSIVE,
            "even data must be inconclusive")
    _expect(catalog.parity_discriminator([]) == catalog.PARITY_INCONCLUSIVE,
            "vacuous data must be inconclusive")
    for k in range(1, (chi_max - 3) // 4 + 1):
        chi = 4 * k + 3
        recipe = catalog.build_component_one(chi)
        verdict = catalog.parity_discriminator(recipe.fiber_component_self_intersections)
        _expect(verdict == catalog.COMPONENT_I == recipe.component_claim,
                f"fiber parity does not certify the first component at chi = {chi}")


def _check_stable_invariants(chi_max, k_max):
    for chi in range(3, chi_max + 1):
        construction = catalog.build_stable(chi)
        record = construction.record
        _expect(record.k_squared == 2 * chi - 5,
                f"stable K^2 = {record.k_squared} instead of {2 * chi - 5} at chi = {chi}")
        _expect(record.chi == chi, f"stable chi = {record.chi} at chi = {chi}")
        _expect(record.ledger.third11_count == 3,
                f"{record.ledger.third11_count} quotient points instead of 3 at chi = {chi}")
        _expect(not record.smoothable, "stable surface must not be smoothable")
        certificate = construction.recipe.certificates[0]
        _expect(certificate.self_intersection == 3 * record.k_squared,
                f"divisor square is not 3*K^2 at chi = {chi}")
        resolved = construction.recipe.report
        _expect(resolved.chi == chi, f"resolution changed chi at chi = {chi}")
        _expect(record.k_squared - resolved.k_squared == 1,
                f"contraction gain is not 1 at chi = {chi}")


def _check_stable_tricanonical_lift(chi_max, k_max):
    for chi in range(3, chi_max + 1):
        construction = catalog.build_stable(chi)
        certificate = construction.recipe.certificates[0]
        resolved_cls = construction.recipe.report.canonical_multiple.cls
        resolved_surface = resolved_cls.surface
        lifted = (lattice.pullback(resolved_surface, certificate.divisor)
                  - resolved_surface.exceptional_sum())
        _expect(resolved_cls == lifted,
                f"resolved tri-canonical class is not the node pullback of the "
                f"certified divisor at chi = {chi}")


def _check_stable_certificates(chi_max, k_max):
    for chi in range(3, chi_max + 1):
        e, alpha, beta = catalog.pick_parameters(chi)
        certificate = catalog.ampleness_certificate(e, alpha, beta)
        if chi == 3:
            _expect(certificate.feasibility_verdict == catalog.VERDICT_EXCEPTIONAL_EXCLUDED,
                    "chi = 3 must take the exceptional branch")
            _expect(certificate.exceptional_witness == (1, 0),
                    "the exceptional witness must be the negative section")
        else:
            _expect(certificate.feasibility_verdict == catalog.VERDICT_INFEASIBLE,
                    f"unexpected exceptional branch at chi = {chi}")
        _expect(certificate.witness_virtual_count == e + 1,
                f"witness count {certificate.witness_virtual_count} instead of "
                f"{e + 1} at chi = {chi}")


def _check_stable_bicanonical(chi_max, k_max):
    for chi in range(3, chi_max + 1):
        record = catalog.build_stable(chi).record
        value = stable.h0_2K(record)
        k_squared = int(record.k_squared)
        _expect(value == chi + k_squared - 1,
                f"bicanonical count {value} instead of {chi + k_squared - 1} at chi = {chi}")
        _expect(record.in_component_without_canonical_models,
                f"no-canonical-models flag not set at chi = {chi}")


def _check_resolution_bookkeeping(chi_max, k_max):
    for chi in range(3, min(chi_max, 20) + 1):
        e, alpha, beta = catalog.pick_parameters(chi)
        ruled = Hirzebruch(e)
        points = 2 * alpha + 2 * beta - 4 * e - 3
        blown = lattice.blow_up(ruled, points)
        exc = blown.exceptional_sum()
        d1 = lattice.pullback(blown, ruled.divisor((2, alpha))) - exc
        d2 = lattice.pullback(blown, ruled.divisor((2, beta))) - exc
        spec = covers.CoverSpec.triple(blown, d1, d2, transversal_node_count=3)
        resolution = stable.resolve_node_bookkeeping(spec)
        _expect(resolution.resolved.chi == resolution.unresolved.chi,
                f"resolution changed chi at chi = {chi}")
        _expect(resolution.unresolved.k_squared - resolution.resolved.k_squared == 1,
                f"K^2 gain from the three retained nodes is not 1 at chi = {chi}")
        _expect(resolution.resolved.k_squared == 2 * chi - 6,
                f"resolved K^2 is not 2*chi - 6 at chi = {chi}")
    # degenerate case: no nodes means nothing changes
    ruled = Hirzebruch(0)
    blown = lattice.blow_up(ruled, 16)
    exc = blown.exceptional_sum()
    spec = covers.CoverSpec.triple(
        blown,
        lattice.pullback(blown, ruled.divisor((2, 7))) - exc,
        lattice.pullback(blown, ruled.divisor((2, 1))) - exc,
    )
    resolution = stable.resolve_node_bookkeeping(spec)
    _expect(resolution.unresolved.k_squared == resolution.resolved.k_squared
            and resolution.unresolved.ledger == stable.EMPTY_LEDGER,
            "node-free bookkeeping must leave the surface unchanged")


def _check_epsilon_bound(chi_max, k_max):
    for chi in range(4, chi_max + 1):
        for epsilon in range(1, (2 * chi + 2) // 3 + 1):
            record = catalog.epsilon_family(chi, epsilon)
            _expect(record.k_squared == 2 * chi - 6 + epsilon,
                    f"K^2 = {record.k_squared} at chi = {chi}, epsilon = {epsilon}")
            bound = 8 * chi - 16
            _expect(3 * record.k_squared <= bound,
                    f"bound violated at chi = {chi}, epsilon = {epsilon}")
            _expect((3 * record.k_squared == bound) == (3 * epsilon == 2 * chi + 2),
                    f"bound equality mischaracterised at chi = {chi}, epsilon = {epsilon}")
            _expect(record.ledger.third11_count == 3 * epsilon,
                    f"ledger count wrong at chi = {chi}, epsilon = {epsilon}")


def _check_nef_witnesses(chi_max, k_max):
    for chi in range(4, chi_max + 1):
        e, alpha, beta = catalog.pick_parameters(chi)
        certificate = catalog.nef_certificate(e, alpha, beta)
        pairings = dict(certificate.pairings)
        _expect(pairings["exceptional curve"] == 1,
                f"exceptional pairing is not 1 at chi = {chi}")
        _expect(pairings["fiber through a blown-up point"] == 1,
                f"fiber pairing is not 1 at chi = {chi}")
        _expect(all(value >= 0 for value in pairings.values()),
                f"negative witness pairing at chi = {chi}")
        _expect(certificate.verdict == covers.NEF_CERTIFIED,
                f"nef verdict is {certificate.verdict} at chi = {chi}")


def _check_germ_classifier(chi_max, k_max):
    table = {(20, 5): "A_4", (2, 2): "A_1", (7, 3): "A_2", (80, 5): "A_4"}
    for (m, p), label in sorted(table.items()):
        got = covers.classify_germ(m, p)
        _expect(got == label, f"germ x^2 + x^{m} + y^{p} classified {got}, expected {label}")


_CHECKS = (
    ("lattice-symmetry-bilinearity",
     "intersection pairing is symmetric and bilinear on random classes",
     _check_symmetry_bilinearity),
    ("lattice-pullback-isometry",
     "pullback embeds the base lattice isometrically and orthogonally to exceptionals",
     _check_pullback_isometry),
    ("lattice-canonical-squares",
     "K^2 is 9 on the plane, 8 on every ruled surface, and drops by 1 per blown-up point",
     _check_canonical_squares),
    ("lattice-section-count-oracle",
     "closed-form section counts match the monomial enumeration oracle",
     _check_section_count_oracle),
    ("lattice-section-count-monotone",
     "section counts on ruled surfaces grow with the fiber degree",
     _check_section_count_monotone),
    ("cover-parameter-table",
     "the parameter table keeps the weighted branch sum divisible by 3",
     _check_parameter_table),
    ("component-one-invariants",
     "first-line construction reports K^2 = 2*chi - 6, chi, p_g = chi - 1 "
     "and 3*K^2 equal to the tri-canonical square",
     _check_component_one_invariants),
    ("component-one-tricanonical-identity",
     "the tri-canonical class equals its fiber-plus-branch form coefficientwise",
     _check_tricanonical_identity),
    ("component-two-invariants",
     "second-component covers report (8k, 4k+3), the stated bicanonical class, "
     "branch curve class 5*D0 + (10k+10)*F and the residue germ",
     _check_component_two_invariants),
    ("component-two-symmetry-residues",
     "each branch curve family is symmetric exactly in its own residue class",
     _check_scroll_symmetry_residues),
    ("classification-components",
     "component count is 2 exactly when K^2 is a multiple of 8, with the stated images",
     _check_classification),
    ("classification-parity-discriminator",
     "two (-3)-curve fibers certify the first component",
     _check_parity_discriminator),
    ("stable-invariants",
     "stable construction reports K^2 = 2*chi - 5 with three one-third quotient "
     "points and divisor square 3*K^2",
     _check_stable_invariants),
    ("stable-ampleness-certificate",
     "feasibility is impossible except at chi = 3, where only the negative "
     "section survives and general position excludes it",
     _check_stable_certificates),
    ("stable-bicanonical-count",
     "h0 of 2K equals chi + K^2 - 1 and differs from chi + K^2",
     _check_stable_bicanonical),
    ("stable-resolution-bookkeeping",
     "resolving the three branch nodes keeps chi and lowers K^2 by exactly 1",
     _check_resolution_bookkeeping),
    ("stable-tricanonical-lift",
     "the resolved tri-canonical class is the node pullback of the certified "
     "ample divisor minus the new exceptional classes",
     _check_stable_tricanonical_lift),
    ("stable-epsilon-bound",
     "contracting 3*epsilon curves gives K^2 = 2*chi - 6 + epsilon within "
     "3*K^2 <= 8*chi - 16, with equality only at the top",
     _check_epsilon_bound),
    ("minimality-nef-witnesses",
     "the tri-canonical divisor pairs nonnegatively with every witness curve "
     "and the feasibility analysis closes",
     _check_nef_witnesses),
    ("germ-classifier",
     "double point germs classify to the expected A types",
     _check_germ_classifier),
)


def check_names() -> tuple[str, ...]:
    return tuple(name for name, _identity, _fn in _CHECKS)


def run_verification(chi_max: int = 30, k_max: int = 6,
                     fault: str | None = None) -> VerificationOutcome:
    """Run every identity check over the requested ranges.

    ``chi_max`` must be at least 6 so that all three residue classes of
    the parameter table are exercised, and ``k_max`` at least 2 so that
    both second-component cover shapes appear.  An optional named fault
    from the fault registry is injected for the duration of the run.
    """
    if chi_max < 6:
        raise ValueError("chi_max must be at least 6 to cover all residue classes")
    if k_max < 2:
        raise ValueError("k_max must be at least 2 to cover both cover shapes")
    if fault is None:
        checks = _run_checks(chi_max, k_max)
    else:
        from . import faults

        with faults.injected(fault):
            checks = _run_checks(chi_max, k_max)
    return VerificationOutcome(chi_max=chi_max, k_max=k_max, fault=fault, checks=checks)


def _run_checks(chi_max: int, k_max: int) -> tuple[CheckResult, ...]:
    results = []
    for name, identity, fn in _CHECKS:
        try:
            fn(chi_max, k_max)
        except _CheckFailure as failure:
            results.append(CheckResult(name, identity, False, str(failure)))
        except Exception as error:  # a broken pipeline is a failed identity too
            results.append(CheckResult(
                name, identity, False,
                f"pipeline error: {type(error).__name__}: {error}",
            ))
        else:
            results.append(CheckResult(name, identity, True))
    return tuple(results)
