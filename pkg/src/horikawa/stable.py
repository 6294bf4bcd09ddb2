"""Bookkeeping for normal surfaces with one-third quotient points.

The tracked singularity is the quotient point whose minimal resolution is
a single (-3)-curve.  Contracting such a curve raises the canonical
self-intersection by one third and blocks Q-Gorenstein smoothings;
rational double points are carried along but are neutral for every
quantity computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import covers, lattice
from .covers import CoverSpec, InvariantReport


class LedgerError(ValueError):
    """A singularity ledger is inconsistent with the claimed invariants."""


@dataclass(frozen=True)
class SingularityLedger:
    """Counts of the singular points carried by a surface."""

    third11_count: int = 0
    canonical_count: int = 0

    def __post_init__(self):
        if self.third11_count < 0 or self.canonical_count < 0:
            raise ValueError("singularity counts must be nonnegative")


EMPTY_LEDGER = SingularityLedger()


@dataclass
class StableSurfaceRecord:
    """Invariants and flags of a normal stable surface."""

    k_squared: Fraction
    chi: int
    ledger: SingularityLedger
    ample_canonical: bool = False
    smoothable: bool = False
    in_component_without_canonical_models: bool = False

    def __post_init__(self):
        self.k_squared = Fraction(self.k_squared)
        if self.ledger.third11_count > 0 and self.smoothable:
            raise LedgerError(
                "a surface with one-third quotient points admits no Q-Gorenstein smoothing"
            )


def contract_minus3(chi: int, k_squared_smooth: int, count: int) -> StableSurfaceRecord:
    """Contract ``count`` disjoint (-3)-curves of a smooth surface.

    chi is unchanged, the canonical self-intersection gains one third per
    contracted curve, and the result is never smoothable.
    """
    if count < 1:
        raise ValueError("at least one curve must be contracted")
    return StableSurfaceRecord(
        k_squared=Fraction(k_squared_smooth) + Fraction(count, 3),
        chi=chi,
        ledger=SingularityLedger(third11_count=count),
        smoothable=False,
    )


def rr_correction(ledger: SingularityLedger) -> Fraction:
    """Local Riemann-Roch correction for the bicanonical class.

    Each one-third quotient point contributes -1/3; rational double
    points contribute nothing.
    """
    return Fraction(-ledger.third11_count, 3)


def h0_2K(record: StableSurfaceRecord) -> int:
    """Bicanonical section count chi + K^2 + correction, which must be integral.

    Also updates the record's no-canonical-models flag: the component of
    the moduli space containing the surface has no canonical models
    exactly when the count differs from chi + K^2.
    """
    total = record.chi + record.k_squared + rr_correction(record.ledger)
    if total.denominator != 1:
        raise LedgerError(
            f"bicanonical count {total} is not an integer: ledger inconsistent "
            "with the claimed invariants"
        )
    value = int(total)
    record.in_component_without_canonical_models = value != record.chi + record.k_squared
    return value


class NodeResolution(NamedTuple):
    resolved: InvariantReport
    unresolved: StableSurfaceRecord


def resolve_node_bookkeeping(spec: CoverSpec) -> NodeResolution:
    """Invariants of a degree 3 cover with retained branch nodes.

    Each transversal node of the branch produces a one-third quotient
    point on the cover.  The canonical resolution blows up every node and
    subtracts the new exceptional class from each branch divisor; the
    unresolved surface keeps chi and gains one third of K^2 per node.
    """
    if spec.degree != 3:
        raise covers.BuildingDataError("node bookkeeping applies to degree 3 covers")
    count = spec.transversal_node_count
    if count == 0:
        resolved = covers.triple_cover_invariants(spec)
        unresolved = StableSurfaceRecord(
            k_squared=resolved.k_squared,
            chi=resolved.chi,
            ledger=EMPTY_LEDGER,
            smoothable=True,
        )
        return NodeResolution(resolved, unresolved)
    # The node locations are determined by the branch curves, so no
    # generality is assumed for the resolving blow-up.
    resolved_base = lattice.blow_up(spec.base, count, general_position=False)
    new_exceptional = resolved_base.exceptional_sum()
    d1, d2 = spec.branch
    resolved_spec = CoverSpec.triple(
        resolved_base,
        lattice.pullback(resolved_base, d1) - new_exceptional,
        lattice.pullback(resolved_base, d2) - new_exceptional,
        smoothness_assumed=spec.smoothness_assumed,
    )
    resolved = covers.triple_cover_invariants(resolved_spec)
    if resolved.k_squared.denominator != 1:
        raise LedgerError("resolved cover has non-integral K^2")
    unresolved = contract_minus3(resolved.chi, int(resolved.k_squared), count)
    return NodeResolution(resolved, unresolved)
