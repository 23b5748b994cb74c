import hashlib
import json
import logging
from dataclasses import dataclass, field

from src.config.config import config
from src.models.algebra import LieAlgebra
from src.models.enums import CasimirStatus, CheckVerdict, Overall
from src.models.params import ExFParams
from src.repository import catalog
from src.repository.documents import algebra_to_document
from src.schemas.reports import AnalysisReport, CasimirVerdictResponse, ChecklistEntry, PolynomialTerm
from src.services.casimir import CasimirVerdict, casimirs_constant_verdict
from src.services.coadjoint import generic_isotropy, generic_rank
from src.services.lie import (center, is_abelian, is_abelian_subspace, is_ad_faithful, is_nilpotent, is_solvable,
                             structurally_equal)
from src.services.polynomials import poly_to_text, sorted_terms
from src.services.rationals import format_rational
from src.services.spectral import type_one_obstruction

logger = logging.getLogger(__name__)

QUASI_ORBIT_CAVEAT = "open dense quasi-orbit hypothesis of the factoriality criterion not decidable by this tool"
LITERATURE = "[literature, not computed]"


@dataclass(frozen=True)
class AnalysisOptions:
    max_casimir_degree: int = field(default_factory=lambda: config.MAX_CASIMIR_DEGREE)
    seed: int = field(default_factory=lambda: config.SEED)
    params: ExFParams | None = None


def constants_hash(g: LieAlgebra) -> str:
    """
    SHA-256 of the canonical JSON of dim, basis labels and structure constants.
    """
    payload = algebra_to_document(g).model_dump(mode="json", exclude={"name"})
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def casimir_response(verdict: CasimirVerdict) -> CasimirVerdictResponse:
    if verdict.witness is None:
        return CasimirVerdictResponse(status=verdict.status, degree_bound=verdict.degree_bound)
    terms = [PolynomialTerm(exps=list(monom), coeff=format_rational(c)) for monom, c in sorted_terms(verdict.witness)]
    return CasimirVerdictResponse(status=verdict.status, degree_bound=verdict.degree_bound, witness=terms,
                                  witness_text=poly_to_text(verdict.witness))


def _checklist(center_dim: int, verdict: CasimirVerdict, index: int) -> list[ChecklistEntry]:
    entries = [
        ChecklistEntry(
            condition="center is trivial",
            verdict=CheckVerdict.passed if center_dim == 0 else CheckVerdict.failed,
            detail=f"center has dimension {center_dim}",
        )
    ]
    if verdict.status == CasimirStatus.all_constant:
        casimir_detail = f"every polynomial Casimir of degree <= {verdict.degree_bound} is constant"
    else:
        casimir_detail = f"nonconstant Casimir {poly_to_text(verdict.witness)}"
    entries.append(ChecklistEntry(
        condition=f"no nonconstant polynomial Casimirs up to degree {verdict.degree_bound}",
        verdict=CheckVerdict.passed if verdict.status == CasimirStatus.all_constant else CheckVerdict.failed,
        detail=casimir_detail,
    ))
    if index >= 1:
        index_detail = f"index {index}: no open coadjoint orbits"
    else:
        index_detail = ("index 0: open coadjoint orbits exist, so the regular representation generates a type I "
                        "von Neumann algebra; simply connected open orbits come in even number, so there is no "
                        "single open dense orbit and the regular representation is not a factor")
    entries.append(ChecklistEntry(
        condition="index >= 1",
        verdict=CheckVerdict.passed if index >= 1 else CheckVerdict.failed,
        detail=index_detail,
    ))
    entries.append(ChecklistEntry(
        condition="some coadjoint quasi-orbit is open and dense with abelian connected isotropy",
        verdict=CheckVerdict.unknown,
        necessary=False,
        detail=QUASI_ORBIT_CAVEAT,
    ))
    return entries


def factoriality_checklist(g: LieAlgebra, d: int | None = None, seed: int | None = None) -> list[ChecklistEntry]:
    """
    Necessary conditions for the regular representation to be a factor, cheapest first.

    :param g: The algebra.
    :type g: LieAlgebra
    :param d: Casimir degree bound.
    :type d: int | None
    :param seed: Seed for generic rank sampling.
    :type seed: int | None
    :return: center, Casimir and index checks, then the undecided quasi-orbit hypothesis.
    :rtype: list[ChecklistEntry]
    """
    seed = config.SEED if seed is None else seed
    center_dim = center(g).dim
    verdict = casimirs_constant_verdict(g, d, seed)
    return _checklist(center_dim, verdict, g.dim - generic_rank(g, seed))


def overall_verdict(solvable: bool, center_dim: int, verdict: CasimirVerdict, index: int) -> Overall:
    if not solvable:
        return Overall.inconclusive
    if index == 0:
        return Overall.frobenius_type_I
    if center_dim or verdict.status == CasimirStatus.nonconstant_found:
        return Overall.not_factor
    return Overall.factor_candidate


FACTOR_VERDICTS = {
    Overall.frobenius_type_I: "not a factor: type I regular representation with an even number of open orbits",
    Overall.not_factor: "not a factor: a necessary condition fails",
    Overall.factor_candidate: f"necessary conditions passed; {QUASI_ORBIT_CAVEAT}",
    Overall.inconclusive: "inconclusive: the criteria apply to solvable Lie algebras only",
}


def _parity_note(g: LieAlgebra, index: int, params: ExFParams | None) -> str | None:
    if index != 0:
        return None
    note = f"index 0 and dim {g.dim} even: simply connected open coadjoint orbits come in even number"
    if params is not None and params.c:
        note += "; this group has two open coadjoint orbits " + LITERATURE
    elif structurally_equal(g, catalog.aff_real()):
        note += "; R x| R+ has two open coadjoint orbits " + LITERATURE
    return note


def _literature_notes(g: LieAlgebra, overall: Overall) -> list[str]:
    notes = []
    if overall == Overall.frobenius_type_I:
        notes.append("A 1-connected solvable Lie group with open coadjoint orbits has a type I group von Neumann "
                     "algebra, even when the group itself is not type I. " + LITERATURE)
        notes.append("A regular representation that is a factor would be the standard hyperfinite II_infinity "
                     "factor; this one is not a factor. " + LITERATURE)
    if overall == Overall.factor_candidate:
        notes.append("If the regular representation is a factor, it is the standard hyperfinite II_infinity factor "
                     "and C*(G) is primitive. " + LITERATURE)
    if structurally_equal(g, catalog.aff_real()):
        notes.append("R x| R+ is 1-connected and its unitary dual has two open points. " + LITERATURE)
    if structurally_equal(g, catalog.aff_complex()):
        notes.append("The universal cover of C x| C^x is 1-connected and its unitary dual has no open points. "
                     + LITERATURE)
    return notes


def analyze(g: LieAlgebra, options: AnalysisOptions | None = None) -> AnalysisReport:
    """
    Run every analysis on g and assemble the report.

    :param g: The algebra.
    :type g: LieAlgebra
    :param options: Degree bound, seed and, for exF algebras, the family parameters.
    :type options: AnalysisOptions | None
    :return: The report; identical inputs give identical reports.
    :rtype: AnalysisReport
    """
    options = options or AnalysisOptions()
    solvable = is_solvable(g)
    nilpotent = is_nilpotent(g)
    z = center(g)
    rank_value = generic_rank(g, options.seed)
    index_value = g.dim - rank_value
    isotropy = generic_isotropy(g, options.seed, target=rank_value).isotropy
    verdict = casimirs_constant_verdict(g, options.max_casimir_degree, options.seed)
    spectral = type_one_obstruction(options.params) if options.params is not None else None
    overall = overall_verdict(solvable, z.dim, verdict, index_value)
    caveats = [f"generic rank from seeded sampling (seed {options.seed})"]
    if overall == Overall.factor_candidate:
        caveats.append(QUASI_ORBIT_CAVEAT)
    if spectral is not None and spectral.type1_obstruction and overall == Overall.frobenius_type_I:
        caveats.append("type I group von Neumann algebra over a group that is not type I")
    logger.info("analysis of %s: index %d, overall %s", g.name, index_value, overall.value)
    return AnalysisReport(
        name=g.name or "algebra",
        dim=g.dim,
        constants_hash=constants_hash(g),
        seed=options.seed,
        solvable=solvable,
        nilpotent=nilpotent,
        abelian=is_abelian(g),
        center_dim=z.dim,
        ad_faithful=is_ad_faithful(g),
        generic_rank=rank_value,
        index=index_value,
        frobenius=index_value == 0,
        generic_isotropy_dim=isotropy.dim,
        generic_isotropy_abelian=is_abelian_subspace(g, isotropy),
        generic_isotropy_contains_center=isotropy.contains_subspace(z),
        casimir=casimir_response(verdict),
        parity_note=_parity_note(g, index_value, options.params),
        factor_checklist=_checklist(z.dim, verdict, index_value),
        factor_verdict=FACTOR_VERDICTS[overall],
        spectral=spectral,
        overall=overall,
        caveats=caveats,
        literature_notes=_literature_notes(g, overall),
    )


def render_machine(report: AnalysisReport) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_spectral_text(spectral) -> list[str]:
    lines = [
        f"  characteristic polynomial: {spectral.char_poly_text}",
        "  imaginary part squares: " + (", ".join(
            f"{s.value} (x{s.multiplicity}{'' if s.exact else ', numeric'})" for s in spectral.imag_part_squares
        ) or "none"),
        "  S_A generators: " + (", ".join(spectral.sA_generators) or "none"),
        f"  closedness: {spectral.closedness.value} ({spectral.confidence.value}"
        + (f", tolerance {spectral.tolerance})" if spectral.tolerance else ")"),
        f"  type I obstruction: {_yes(spectral.type1_obstruction)}",
    ]
    lines.extend(f"  - {note}" for note in spectral.notes)
    return lines


def render_text(report: AnalysisReport) -> str:
    """
    Human-readable report.

    :param report: The analysis.
    :type report: AnalysisReport
    :return: The report as text lines.
    :rtype: str
    """
    lines = [
        f"{report.name} (dim {report.dim})",
        f"constants hash: {report.constants_hash}",
        f"solvable: {_yes(report.solvable)}   nilpotent: {_yes(report.nilpotent)}   abelian: {_yes(report.abelian)}",
        f"center dim: {report.center_dim}   ad faithful: {_yes(report.ad_faithful)}",
        f"generic rank: {report.generic_rank}   index: {report.index}   frobenius: {_yes(report.frobenius)}",
        f"generic isotropy: dim {report.generic_isotropy_dim}, abelian: {_yes(report.generic_isotropy_abelian)}",
    ]
    casimir = report.casimir
    if casimir.status == CasimirStatus.all_constant:
        lines.append(f"Casimirs: all constant up to degree {casimir.degree_bound}")
    else:
        lines.append(f"Casimirs: nonconstant found up to degree {casimir.degree_bound}: {casimir.witness_text}")
    if report.parity_note:
        lines.append(f"parity: {report.parity_note}")
    lines.append("factoriality checklist:")
    for entry in report.factor_checklist:
        kind = "necessary" if entry.necessary else "hypothesis"
        lines.append(f"  [{entry.verdict.value}] {entry.condition} ({kind}): {entry.detail}")
    lines.append(f"factor verdict: {report.factor_verdict}")
    if report.spectral is not None:
        lines.append("spectral:")
        lines.extend(render_spectral_text(report.spectral))
    lines.append(f"overall: {report.overall.value}")
    lines.extend(f"caveat: {caveat}" for caveat in report.caveats)
    lines.extend(f"note: {note}" for note in report.literature_notes)
    return "\n".join(lines) + "\n"
