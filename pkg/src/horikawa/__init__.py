"""Exact divisor calculus on the low invariant lines of general type.

The package computes, in exact integer and rational arithmetic,
intersection theory on the plane, Hirzebruch surfaces and their blow-ups,
the numerical invariants of degree 2 and 3 cyclic covers, the component
structure of the moduli space on the line K^2 = 2*chi - 6, the
non-smoothable stable surfaces on the line K^2 = 2*chi - 5, and the
integer feasibility certificates backing the ampleness and nefness
claims of those constructions.
"""

from .catalog import (AdmissiblePair, AmplenessCertificate, ComponentInfo,
                      ConstructionRecipe, NefCertificate, StableConstruction,
                      admissible, ampleness_certificate, build_component_one,
                      build_component_two, build_stable, classify,
                      component_two_scroll_curve, epsilon_family, nef_certificate,
                      parity_discriminator, pick_parameters, scroll_family_curve)
from .covers import (CanonicalImageInfo, CanonicalMultiple, CoverSpec,
                     InvariantReport, ScrollCurve, canonical_image_info,
                     classify_germ, derive_root, double_cover_invariants,
                     invariance_check, scroll_class, triple_cover_invariants)
from .lattice import (BlowUp, DivisorClass, Hirzebruch, ProjectivePlane,
                      SectionCount, SurfaceMismatchError, SurfaceModel, blow_up,
                      canonical_class, h0, intersect, picard_rank, pullback)
from .stable import (SingularityLedger, StableSurfaceRecord, contract_minus3,
                     h0_2K, resolve_node_bookkeeping, rr_correction)
from .verify import run_verification

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePair",
    "AmplenessCertificate",
    "BlowUp",
    "CanonicalImageInfo",
    "CanonicalMultiple",
    "ComponentInfo",
    "ConstructionRecipe",
    "CoverSpec",
    "DivisorClass",
    "Hirzebruch",
    "InvariantReport",
    "NefCertificate",
    "ProjectivePlane",
    "ScrollCurve",
    "SectionCount",
    "SingularityLedger",
    "StableConstruction",
    "StableSurfaceRecord",
    "SurfaceMismatchError",
    "SurfaceModel",
    "admissible",
    "ampleness_certificate",
    "blow_up",
    "build_component_one",
    "build_component_two",
    "build_stable",
    "canonical_class",
    "canonical_image_info",
    "classify",
    "classify_germ",
    "component_two_scroll_curve",
    "contract_minus3",
    "derive_root",
    "double_cover_invariants",
    "epsilon_family",
    "h0",
    "h0_2K",
    "intersect",
    "invariance_check",
    "nef_certificate",
    "parity_discriminator",
    "picard_rank",
    "pick_parameters",
    "pullback",
    "resolve_node_bookkeeping",
    "rr_correction",
    "run_verification",
    "scroll_class",
    "scroll_family_curve",
    "triple_cover_invariants",
]
