"""Machine readable reports for the command line front end.

A Report wraps one command's echoed inputs, a typed payload, the
derivation trail of its numeric fields and the assumptions in force.
Reports serialise to JSON and parse back to equal values; integers whose
magnitude exceeds 64 bits are carried as decimal strings so that no
consumer silently truncates them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import lattice, stable
from .catalog import (AdmissiblePair, AmplenessCertificate, ComponentInfo,
                      ConstructionRecipe, NefCertificate)
from .covers import CanonicalMultiple, InvariantReport, ScrollCurve
from .lattice import BlowUp, DivisorClass, Hirzebruch, ProjectivePlane, SurfaceModel
from .stable import SingularityLedger, StableSurfaceRecord
from .verify import CheckResult, VerificationOutcome

SCHEMA = "horikawa-report/1"
P_G_UNAVAILABLE = "unavailable(virtual)"

_INT64_MAX = 2**63 - 1
_INT64_MIN = -(2**63)


# ---------------------------------------------------------------------------
# scalar codecs

def _enc_int(value: int):
    if _INT64_MIN <= value <= _INT64_MAX:
        return value
    return str(value)


def _dec_int(value) -> int:
    if isinstance(value, bool):
        raise ValueError("expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value)
    raise ValueError(f"expected an integer, got {value!r}")


def _enc_fraction(value: Fraction) -> str:
    return str(value)


def _dec_fraction(value) -> Fraction:
    return Fraction(str(value))


def _dec_opt(decoder, value):
    return None if value is None else decoder(value)


def _enc_opt(encoder, value):
    return None if value is None else encoder(value)


# ---------------------------------------------------------------------------
# structured codecs

def _enc_surface(surface: SurfaceModel) -> dict:
    if isinstance(surface, ProjectivePlane):
        return {"kind": "plane"}
    if isinstance(surface, Hirzebruch):
        return {"kind": "ruled", "e": surface.e}
    if isinstance(surface, BlowUp):
        return {
            "kind": "blow-up",
            "base": _enc_surface(surface.base),
            "points": surface.point_count,
            "general_position": surface.general_position,
        }
    raise ValueError(f"cannot encode surface {surface!r}")


def _dec_surface(data: dict) -> SurfaceModel:
    kind = data["kind"]
    if kind == "plane":
        return ProjectivePlane()
    if kind == "ruled":
        return Hirzebruch(_dec_int(data["e"]))
    if kind == "blow-up":
        return BlowUp(
            _dec_surface(data["base"]),
            _dec_int(data["points"]),
            bool(data["general_position"]),
        )
    raise ValueError(f"unknown surface kind {kind!r}")


def _enc_class(d: DivisorClass) -> dict:
    return {
        "surface": _enc_surface(d.surface),
        "coeffs": [_enc_int(c) for c in d.coeffs],
        "display": str(d),
    }


def _dec_class(data: dict) -> DivisorClass:
    surface = _dec_surface(data["surface"])
    return DivisorClass(surface, tuple(_dec_int(c) for c in data["coeffs"]))


def _enc_invariants(report: InvariantReport) -> dict:
    return {
        "k_squared": _enc_fraction(report.k_squared),
        "chi": _enc_int(report.chi),
        "p_g": P_G_UNAVAILABLE if report.p_g is None else _enc_int(report.p_g),
        "canonical_multiple": {
            "multiple": report.canonical_multiple.multiple,
            "class": _enc_class(report.canonical_multiple.cls),
        },
        "minimal_or_ample": report.minimal_or_ample,
        "warnings": list(report.warnings),
        "assumptions": list(report.assumptions),
    }


def _dec_invariants(data: dict) -> InvariantReport:
    p_g = data["p_g"]
    return InvariantReport(
        k_squared=_dec_fraction(data["k_squared"]),
        chi=_dec_int(data["chi"]),
        p_g=None if p_g == P_G_UNAVAILABLE else _dec_int(p_g),
        canonical_multiple=CanonicalMultiple(
            _dec_int(data["canonical_multiple"]["multiple"]),
            _dec_class(data["canonical_multiple"]["class"]),
        ),
        minimal_or_ample=data["minimal_or_ample"],
        warnings=tuple(data["warnings"]),
        assumptions=tuple(data["assumptions"]),
    )


def _enc_ledger(ledger: SingularityLedger) -> dict:
    return {
        "third11_count": _enc_int(ledger.third11_count),
        "canonical_count": _enc_int(ledger.canonical_count),
    }


def _dec_ledger(data: dict) -> SingularityLedger:
    return SingularityLedger(
        third11_count=_dec_int(data["third11_count"]),
        canonical_count=_dec_int(data["canonical_count"]),
    )


def _enc_record(record: StableSurfaceRecord) -> dict:
    return {
        "k_squared": _enc_fraction(record.k_squared),
        "chi": _enc_int(record.chi),
        "ledger": _enc_ledger(record.ledger),
        "ample_canonical": record.ample_canonical,
        "smoothable": record.smoothable,
        "in_component_without_canonical_models":
            record.in_component_without_canonical_models,
    }


def _dec_record(data: dict) -> StableSurfaceRecord:
    return StableSurfaceRecord(
        k_squared=_dec_fraction(data["k_squared"]),
        chi=_dec_int(data["chi"]),
        ledger=_dec_ledger(data["ledger"]),
        ample_canonical=bool(data["ample_canonical"]),
        smoothable=bool(data["smoothable"]),
        in_component_without_canonical_models=bool(
            data["in_component_without_canonical_models"]
        ),
    )


def _enc_scroll_curve(curve: ScrollCurve) -> dict:
    return {
        "e": _enc_int(curve.e),
        "monomials": sorted([_enc_int(x) for x in m] for m in curve.monomials),
    }


def _dec_scroll_curve(data: dict) -> ScrollCurve:
    return ScrollCurve(
        e=_dec_int(data["e"]),
        monomials=frozenset(tuple(_dec_int(x) for x in m) for m in data["monomials"]),
    )


def _enc_component_info(info: ComponentInfo) -> dict:
    return {
        "count": info.count,
        "labels": list(info.labels),
        "canonical_images": {label: list(images)
                             for label, images in sorted(info.canonical_images.items())},
    }


def _dec_component_info(data: dict) -> ComponentInfo:
    return ComponentInfo(
        count=_dec_int(data["count"]),
        labels=tuple(data["labels"]),
        canonical_images={label: tuple(images)
                          for label, images in data["canonical_images"].items()},
    )


def _enc_ampleness(cert: AmplenessCertificate) -> dict:
    return {
        "certificate": "ampleness",
        "divisor": _enc_class(cert.divisor),
        "self_intersection": _enc_int(cert.self_intersection),
        "feasibility_verdict": cert.feasibility_verdict,
        "coefficient": _enc_int(cert.coefficient),
        "witness_class": _enc_class(cert.witness_class),
        "witness_virtual_count": _enc_int(cert.witness_virtual_count),
        "witness_tight": cert.witness_tight,
        "exceptional_witness": (None if cert.exceptional_witness is None
                                else [_enc_int(x) for x in cert.exceptional_witness]),
        "exceptional_reason": cert.exceptional_reason,
    }


def _dec_ampleness(data: dict) -> AmplenessCertificate:
    witness = data["exceptional_witness"]
    return AmplenessCertificate(
        divisor=_dec_class(data["divisor"]),
        self_intersection=_dec_int(data["self_intersection"]),
        feasibility_verdict=data["feasibility_verdict"],
        coefficient=_dec_int(data["coefficient"]),
        witness_class=_dec_class(data["witness_class"]),
        witness_virtual_count=_dec_int(data["witness_virtual_count"]),
        witness_tight=bool(data["witness_tight"]),
        exceptional_witness=None if witness is None else tuple(_dec_int(x) for x in witness),
        exceptional_reason=data["exceptional_reason"],
    )


def _enc_nef(cert: NefCertificate) -> dict:
    return {
        "certificate": "nefness",
        "verdict": cert.verdict,
        "divisor": _enc_class(cert.divisor),
        "pairings": [[name, _enc_int(value)] for name, value in cert.pairings],
        "closure_coefficient": _enc_int(cert.closure_coefficient),
        "gap": cert.gap,
    }


def _dec_nef(data: dict) -> NefCertificate:
    return NefCertificate(
        verdict=data["verdict"],
        divisor=_dec_class(data["divisor"]),
        pairings=tuple((name, _dec_int(value)) for name, value in data["pairings"]),
        closure_coefficient=_dec_int(data["closure_coefficient"]),
        gap=data["gap"],
    )


def _enc_certificate(cert) -> dict:
    if isinstance(cert, AmplenessCertificate):
        return _enc_ampleness(cert)
    if isinstance(cert, NefCertificate):
        return _enc_nef(cert)
    raise ValueError(f"cannot encode certificate {cert!r}")


def _dec_certificate(data: dict):
    kind = data["certificate"]
    if kind == "ampleness":
        return _dec_ampleness(data)
    if kind == "nefness":
        return _dec_nef(data)
    raise ValueError(f"unknown certificate kind {kind!r}")


def _enc_recipe(recipe: ConstructionRecipe) -> dict:
    return {
        "target": {"k_squared": _enc_int(recipe.target.k_squared),
                   "chi": _enc_int(recipe.target.chi)},
        "base": _enc_surface(recipe.base),
        "base_display": lattice.surface_descriptor(recipe.base),
        "branch": [_enc_class(d) for d in recipe.branch],
        "blow_up_count": _enc_int(recipe.blow_up_count),
        "report": _enc_invariants(recipe.report),
        "component_claim": recipe.component_claim,
        "certificates": [_enc_certificate(c) for c in recipe.certificates],
        "parameters": (None if recipe.parameters is None
                       else [_enc_int(x) for x in recipe.parameters]),
        "k": None if recipe.k is None else _enc_int(recipe.k),
        "canonical_image": recipe.canonical_image,
        "canonical_sections": (None if recipe.canonical_sections is None
                               else _enc_int(recipe.canonical_sections)),
        "fiber_component_self_intersections": (
            None if recipe.fiber_component_self_intersections is None
            else [_enc_int(x) for x in recipe.fiber_component_self_intersections]),
        "scroll_curve": (None if recipe.scroll_curve is None
                         else _enc_scroll_curve(recipe.scroll_curve)),
        "germ": recipe.germ,
        "ledger": _enc_ledger(recipe.ledger),
        "notes": list(recipe.notes),
    }


def _dec_recipe(data: dict) -> ConstructionRecipe:
    fibers = data["fiber_component_self_intersections"]
    parameters = data["parameters"]
    return ConstructionRecipe(
        target=AdmissiblePair(_dec_int(data["target"]["k_squared"]),
                              _dec_int(data["target"]["chi"])),
        base=_dec_surface(data["base"]),
        branch=tuple(_dec_class(d) for d in data["branch"]),
        blow_up_count=_dec_int(data["blow_up_count"]),
        report=_dec_invariants(data["report"]),
        component_claim=data["component_claim"],
        certificates=tuple(_dec_certificate(c) for c in data["certificates"]),
        parameters=None if parameters is None else tuple(_dec_int(x) for x in parameters),
        k=_dec_opt(_dec_int, data["k"]),
        canonical_image=data["canonical_image"],
        canonical_sections=_dec_opt(_dec_int, data["canonical_sections"]),
        fiber_component_self_intersections=(
            None if fibers is None else tuple(_dec_int(x) for x in fibers)),
        scroll_curve=_dec_opt(_dec_scroll_curve, data["scroll_curve"]),
        germ=data["germ"],
        ledger=_dec_ledger(data["ledger"]),
        notes=tuple(data["notes"]),
    )


# ---------------------------------------------------------------------------
# payloads

@dataclass(frozen=True)
class ClassificationPayload:
    k_squared: int
    chi: int
    admissible: bool
    on_line: bool
    info: ComponentInfo | None
    explanation: str


@dataclass(frozen=True)
class ConstructionPayload:
    variant: str
    recipe: ConstructionRecipe
    record: StableSurfaceRecord | None = None


@dataclass(frozen=True)
class EnumerationRow:
    chi: int
    general_type_k_squared: int | None
    component_count: int | None
    constructions: tuple[str, ...]
    stable_k_squared: int | None
    stable_third11_count: int | None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class EnumerationPayload:
    rows: tuple[EnumerationRow, ...]


@dataclass(frozen=True)
class VerificationPayload:
    chi_max: int
    k_max: int
    fault: str | None
    passed: bool
    checks: tuple[CheckResult, ...]

    @classmethod
    def from_outcome(cls, outcome: VerificationOutcome) -> "VerificationPayload":
        return cls(
            chi_max=outcome.chi_max,
            k_max=outcome.k_max,
            fault=outcome.fault,
            passed=outcome.passed,
            checks=outcome.checks,
        )


def _enc_classification(payload: ClassificationPayload) -> dict:
    return {
        "k_squared": _enc_int(payload.k_squared),
        "chi": _enc_int(payload.chi),
        "admissible": payload.admissible,
        "on_line": payload.on_line,
        "components": None if payload.info is None else _enc_component_info(payload.info),
        "explanation": payload.explanation,
    }


def _dec_classification(data: dict) -> ClassificationPayload:
    return ClassificationPayload(
        k_squared=_dec_int(data["k_squared"]),
        chi=_dec_int(data["chi"]),
        admissible=bool(data["admissible"]),
        on_line=bool(data["on_line"]),
        info=_dec_opt(_dec_component_info, data["components"]),
        explanation=data["explanation"],
    )


def _enc_construction(payload: ConstructionPayload) -> dict:
    return {
        "variant": payload.variant,
        "recipe": _enc_recipe(payload.recipe),
        "record": None if payload.record is None else _enc_record(payload.record),
    }


def _dec_construction(data: dict) -> ConstructionPayload:
    return ConstructionPayload(
        variant=data["variant"],
        recipe=_dec_recipe(data["recipe"]),
        record=_dec_opt(_dec_record, data["record"]),
    )


def _enc_row(row: EnumerationRow) -> dict:
    return {
        "chi": _enc_int(row.chi),
        "general_type_k_squared": _enc_opt(_enc_int, row.general_type_k_squared),
        "component_count": _enc_opt(_enc_int, row.component_count),
        "constructions": list(row.constructions),
        "stable_k_squared": _enc_opt(_enc_int, row.stable_k_squared),
        "stable_third11_count": _enc_opt(_enc_int, row.stable_third11_count),
        "notes": list(row.notes),
    }


def _dec_row(data: dict) -> EnumerationRow:
    return EnumerationRow(
        chi=_dec_int(data["chi"]),
        general_type_k_squared=_dec_opt(_dec_int, data["general_type_k_squared"]),
        component_count=_dec_opt(_dec_int, data["component_count"]),
        constructions=tuple(data["constructions"]),
        stable_k_squared=_dec_opt(_dec_int, data["stable_k_squared"]),
        stable_third11_count=_dec_opt(_dec_int, data["stable_third11_count"]),
        notes=tuple(data["notes"]),
    )


def _enc_verification(payload: VerificationPayload) -> dict:
    return {
        "chi_max": _enc_int(payload.chi_max),
        "k_max": _enc_int(payload.k_max),
        "fault": payload.fault,
        "passed": payload.passed,
        "checks": [
            {"name": c.name, "identity": c.identity, "passed": c.passed, "detail": c.detail}
            for c in payload.checks
        ],
    }


def _dec_verification(data: dict) -> VerificationPayload:
    return VerificationPayload(
        chi_max=_dec_int(data["chi_max"]),
        k_max=_dec_int(data["k_max"]),
        fault=data["fault"],
        passed=bool(data["passed"]),
        checks=tuple(
            CheckResult(c["name"], c["identity"], bool(c["passed"]), c["detail"])
            for c in data["checks"]
        ),
    )


_PAYLOAD_CODECS = {
    "classification": (ClassificationPayload, _enc_classification, _dec_classification),
    "construction": (ConstructionPayload, _enc_construction, _dec_construction),
    "enumeration": (EnumerationPayload,
                    lambda p: {"rows": [_enc_row(r) for r in p.rows]},
                    lambda d: EnumerationPayload(tuple(_dec_row(r) for r in d["rows"]))),
    "verification": (VerificationPayload, _enc_verification, _dec_verification),
}


@dataclass(frozen=True)
class Report:
    """One command's inputs, payload, derivation trail and assumptions."""

    command: str
    inputs: dict
    payload_kind: str
    payload: object
    derivations: dict = field(default_factory=dict)
    assumptions: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    def to_jsonable(self) -> dict:
        if self.payload_kind not in _PAYLOAD_CODECS:
            raise ValueError(f"unknown payload kind {self.payload_kind!r}")
        _cls, encode, _decode = _PAYLOAD_CODECS[self.payload_kind]
        return {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": dict(self.inputs),
            "payload_kind": self.payload_kind,
            "payload": encode(self.payload),
            "derivations": dict(self.derivations),
            "assumptions": list(self.assumptions),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_jsonable(cls, data: dict) -> "Report":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        kind = data["payload_kind"]
        if kind not in _PAYLOAD_CODECS:
            raise ValueError(f"unknown payload kind {kind!r}")
        _cls, _encode, decode = _PAYLOAD_CODECS[kind]
        return cls(
            command=data["command"],
            inputs=dict(data["inputs"]),
            payload_kind=kind,
            payload=decode(data["payload"]),
            derivations=dict(data["derivations"]),
            assumptions=tuple(data["assumptions"]),
            notes=tuple(data["notes"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_jsonable(json.loads(text))


# ---------------------------------------------------------------------------
# text rendering

def _render_invariants(report: InvariantReport, lines: list[str], indent: str = "  "):
    lines.append(f"{indent}K^2 = {report.k_squared}")
    lines.append(f"{indent}chi = {report.chi}")
    p_g = P_G_UNAVAILABLE if report.p_g is None else report.p_g
    lines.append(f"{indent}p_g = {p_g}")
    cm = report.canonical_multiple
    lines.append(f"{indent}{cm.multiple}K = pullback of {cm.cls}")
    lines.append(f"{indent}minimality/ampleness: {report.minimal_or_ample}")
    for warning in report.warnings:
        lines.append(f"{indent}warning: {warning}")


def _render_certificate(cert, lines: list[str], indent: str = "  "):
    if isinstance(cert, AmplenessCertificate):
        lines.append(f"{indent}ampleness certificate:")
        lines.append(f"{indent}  divisor {cert.divisor}")
        lines.append(f"{indent}  self-intersection {cert.self_intersection}")
        lines.append(f"{indent}  feasibility: {cert.feasibility_verdict} "
                     f"(coefficient {cert.coefficient})")
        lines.append(f"{indent}  witness {cert.witness_class} "
                     f"(virtual count {cert.witness_virtual_count}"
                     f"{', tight' if cert.witness_tight else ''})")
        if cert.exceptional_witness is not None:
            a, b = cert.exceptional_witness
            lines.append(f"{indent}  exceptional witness (a, b) = ({a}, {b}): "
                         f"{cert.exceptional_reason}")
    elif isinstance(cert, NefCertificate):
        lines.append(f"{indent}nefness certificate: {cert.verdict}")
        for name, value in cert.pairings:
            lines.append(f"{indent}  D . ({name}) = {value}")
        lines.append(f"{indent}  closure coefficient {cert.closure_coefficient}")
        if cert.gap:
            lines.append(f"{indent}  gap: {cert.gap}")


def render_text(report: Report) -> str:
    lines = [f"horikawa {report.command}"]
    if report.inputs:
        rendered = ", ".join(f"{k} = {v}" for k, v in sorted(report.inputs.items()))
        lines.append(f"inputs: {rendered}")
    lines.append("-" * 60)
    payload = report.payload
    if report.payload_kind == "classification":
        lines.append(f"pair: K^2 = {payload.k_squared}, chi = {payload.chi}")
        lines.append(f"admissible: {'yes' if payload.admissible else 'no'}")
        lines.append(f"on the line K^2 = 2*chi - 6: {'yes' if payload.on_line else 'no'}")
        lines.append(payload.explanation)
        if payload.info is not None:
            lines.append(f"components: {payload.info.count}")
            for label in payload.info.labels:
                images = ", ".join(payload.info.canonical_images[label])
                lines.append(f"  {label}: canonical images {images}")
    elif report.payload_kind == "construction":
        recipe = payload.recipe
        lines.append(f"variant: {payload.variant}")
        lines.append(f"target: K^2 = {recipe.target.k_squared}, chi = {recipe.target.chi}")
        if recipe.parameters is not None:
            e, alpha, beta = recipe.parameters
            lines.append(f"parameters: e = {e}, alpha = {alpha}, beta = {beta}")
        if recipe.k is not None:
            lines.append(f"parameter k = {recipe.k}")
        lines.append(f"base: {lattice.surface_descriptor(recipe.base)}")
        lines.append(f"blown-up points: {recipe.blow_up_count}")
        for i, cls in enumerate(recipe.branch, start=1):
            lines.append(f"branch {i}: {cls}")
        if recipe.scroll_curve is not None:
            monomials = ", ".join(str(m) for m in sorted(recipe.scroll_curve.monomials))
            lines.append(f"branch curve monomials (t1, t2, x1, x2 exponents): {monomials}")
        if recipe.germ is not None:
            lines.append(f"branch germ type: {recipe.germ}")
        lines.append(f"component claim: {recipe.component_claim}")
        if recipe.canonical_image is not None:
            lines.append(f"canonical image: {recipe.canonical_image} "
                         f"({recipe.canonical_sections} sections)")
        if recipe.fiber_component_self_intersections is not None:
            values = ", ".join(str(v) for v in recipe.fiber_component_self_intersections)
            lines.append(f"genus-2 fiber components over blown-up points: {values}")
        if recipe.ledger != stable.EMPTY_LEDGER:
            lines.append(f"singularities: {recipe.ledger.third11_count} one-third quotient "
                         f"points, {recipe.ledger.canonical_count} rational double points")
        lines.append("invariants:")
        _render_invariants(recipe.report, lines)
        for cert in recipe.certificates:
            _render_certificate(cert, lines)
        if payload.record is not None:
            record = payload.record
            lines.append("stable surface record:")
            lines.append(f"  K^2 = {record.k_squared}")
            lines.append(f"  chi = {record.chi}")
            lines.append(f"  one-third quotient points: {record.ledger.third11_count}")
            lines.append(f"  ample canonical class: {record.ample_canonical}")
            lines.append(f"  Q-Gorenstein smoothable: {record.smoothable}")
            lines.append("  in a moduli component without canonical models: "
                         f"{record.in_component_without_canonical_models}")
        for note in recipe.notes:
            lines.append(f"note: {note}")
    elif report.payload_kind == "enumeration":
        lines.append(f"{'chi':>4} {'K^2':>5} {'comps':>5} {'K^2*':>5} {'sing*':>5}  "
                     "constructions")
        lines.append("(K^2, comps: line K^2 = 2chi-6; K^2*, sing*: line K^2 = 2chi-5)")
        for row in payload.rows:
            k2 = "-" if row.general_type_k_squared is None else row.general_type_k_squared
            comps = "-" if row.component_count is None else row.component_count
            k2s = "-" if row.stable_k_squared is None else row.stable_k_squared
            sing = "-" if row.stable_third11_count is None else row.stable_third11_count
            built = ", ".join(row.constructions) if row.constructions else "-"
            lines.append(f"{row.chi:>4} {k2!s:>5} {comps!s:>5} {k2s!s:>5} {sing!s:>5}  {built}")
            for note in row.notes:
                lines.append(f"      note: {note}")
        lines.append(f"rows: {len(payload.rows)}")
    elif report.payload_kind == "verification":
        for check in payload.checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(f"check {check.name}: {status}")
            lines.append(f"  identity: {check.identity}")
            if not check.passed:
                lines.append(f"  detail: {check.detail}")
        total = len(payload.checks)
        good = sum(1 for c in payload.checks if c.passed)
        if payload.fault is not None:
            lines.append(f"injected fault: {payload.fault}")
        lines.append(f"summary: {good}/{total} checks passed "
                     f"(chi <= {payload.chi_max}, k <= {payload.k_max})")
        if good != total:
            first = next(c for c in payload.checks if not c.passed)
            lines.append(f"first violated identity: {first.name} ({first.identity})")
    else:
        raise ValueError(f"unknown payload kind {report.payload_kind!r}")
    if report.assumptions:
        lines.append("assumptions:")
        for assumption in report.assumptions:
            lines.append(f"  - {assumption}")
    if report.notes:
        for note in report.notes:
            lines.append(f"note: {note}")
    if report.derivations:
        lines.append("derivations:")
        for key in sorted(report.derivations):
            lines.append(f"  {key}: {report.derivations[key]}")
    return "\n".join(lines) + "\n"
