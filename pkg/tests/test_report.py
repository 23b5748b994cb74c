import json

import pytest

from src.models.enums import CasimirStatus, CheckVerdict, Overall
from src.repository import catalog
from src.services.casimir import CasimirVerdict
from src.services.lie import make_algebra
from src.services.report import (FACTOR_VERDICTS, LITERATURE, QUASI_ORBIT_CAVEAT, AnalysisOptions, analyze,
                                 constants_hash, factoriality_checklist, overall_verdict, render_machine, render_text)


def quick(degree=2, **kwargs):
    return AnalysisOptions(max_casimir_degree=degree, seed=0, **kwargs)


def test_heisenberg_is_not_a_factor(h3):
    report = analyze(h3, quick(4))
    assert (report.dim, report.center_dim, report.generic_rank, report.index) == (3, 1, 2, 1)
    assert report.solvable and report.nilpotent
    assert not report.frobenius
    assert report.casimir.status == CasimirStatus.nonconstant_found
    assert report.casimir.witness_text == "xi0"
    verdicts = [entry.verdict for entry in report.factor_checklist]
    assert verdicts == [CheckVerdict.failed, CheckVerdict.failed, CheckVerdict.passed, CheckVerdict.unknown]
    assert report.overall == Overall.not_factor
    assert report.parity_note is None
    assert report.spectral is None


def test_quasi_orbit_entry_is_not_necessary(h3):
    entries = factoriality_checklist(h3, 2, seed=0)
    assert len(entries) == 4
    assert all(entry.necessary for entry in entries[:3])
    assert not entries[3].necessary
    assert entries[3].detail == QUASI_ORBIT_CAVEAT


def test_aff_real_is_frobenius(aff_real):
    report = analyze(aff_real, quick(4))
    assert report.index == 0 and report.frobenius
    assert report.overall == Overall.frobenius_type_I
    assert report.casimir.status == CasimirStatus.all_constant
    assert "not a factor" in report.factor_checklist[2].detail
    assert "two open coadjoint orbits" in report.parity_note
    assert report.parity_note.endswith(LITERATURE)
    assert all(note.endswith(LITERATURE) for note in report.literature_notes)


def test_heisenberg_five_is_not_a_factor():
    report = analyze(catalog.heisenberg(2), quick())
    assert report.overall == Overall.not_factor
    assert report.index == 1


def test_abelian_is_not_a_factor(abelian3):
    report = analyze(abelian3, quick())
    assert report.overall == Overall.not_factor
    assert report.casimir.status == CasimirStatus.nonconstant_found
    assert report.index == 3
    assert report.generic_isotropy_abelian


def test_non_solvable_is_inconclusive(cyclic):
    report = analyze(cyclic, quick())
    assert not report.solvable
    assert report.overall == Overall.inconclusive
    assert report.factor_verdict == FACTOR_VERDICTS[Overall.inconclusive]


def test_exf_irrational_theta(exf_irrational):
    g, params = exf_irrational
    report = analyze(g, quick(4, params=params))
    assert report.dim == 10
    assert report.index == 0
    assert report.center_dim == 0
    assert report.casimir.status == CasimirStatus.all_constant
    assert report.overall == Overall.frobenius_type_I
    assert report.spectral.type1_obstruction
    assert "type I group von Neumann algebra over a group that is not type I" in report.caveats
    assert "two open coadjoint orbits" in report.parity_note


def test_exf_rational_theta_has_no_obstruction(exf_half):
    g, params = exf_half
    report = analyze(g, quick(params=params))
    assert report.overall == Overall.frobenius_type_I
    assert not report.spectral.type1_obstruction
    assert len(report.caveats) == 1


def test_overall_verdict_rules():
    constant = CasimirVerdict(CasimirStatus.all_constant, 4)
    found = CasimirVerdict(CasimirStatus.nonconstant_found, 4)
    assert overall_verdict(False, 0, constant, 0) == Overall.inconclusive
    assert overall_verdict(True, 0, constant, 0) == Overall.frobenius_type_I
    assert overall_verdict(True, 1, constant, 1) == Overall.not_factor
    assert overall_verdict(True, 0, found, 2) == Overall.not_factor
    assert overall_verdict(True, 0, constant, 2) == Overall.factor_candidate
    assert QUASI_ORBIT_CAVEAT in FACTOR_VERDICTS[Overall.factor_candidate]


def test_frobenius_implies_even_dim_and_constant_casimirs(catalog_algebras):
    for g in catalog_algebras:
        report = analyze(g, quick())
        assert report.generic_isotropy_contains_center
        assert report.generic_rank % 2 == 0
        if report.frobenius:
            assert report.dim % 2 == 0
            assert report.casimir.status == CasimirStatus.all_constant
            assert report.center_dim == 0


def test_constants_hash_ignores_name():
    first = make_algebra(["x", "y"], {(0, 1): (1, 0)}, "first")
    second = make_algebra(["x", "y"], {(0, 1): (1, 0)}, "second")
    other = make_algebra(["x", "y"], {(0, 1): (2, 0)}, "first")
    assert constants_hash(first) == constants_hash(second)
    assert constants_hash(first) != constants_hash(other)
    assert len(constants_hash(first)) == 64


def test_machine_output_is_deterministic(h3):
    first = render_machine(analyze(h3, quick()))
    second = render_machine(analyze(catalog.heisenberg(1), quick()))
    assert first == second
    document = json.loads(first)
    assert document["overall"] == "not_factor"
    assert document["casimir"]["witness"] == [{"exps": [1, 0, 0], "coeff": "1"}]


@pytest.mark.parametrize("options", [quick(), quick(3)])
def test_text_rendering(aff_real, options):
    text = render_text(analyze(aff_real, options))
    assert text.startswith("aff_real (dim 2)\n")
    assert "overall: frobenius_type_I" in text
    assert "[fail] index >= 1 (necessary)" in text
    assert text.endswith("\n")


def test_notes_follow_structure_not_name(aff_real, aff_complex):
    renamed = make_algebra(["p", "q"], dict(aff_real.brackets), "affine line")
    report = analyze(renamed, quick())
    assert "R x| R+ has two open coadjoint orbits" in report.parity_note
    assert any("unitary dual has two open points" in note for note in report.literature_notes)

    relabeled = make_algebra(["u", "v", "w", "z"], dict(aff_complex.brackets), "")
    notes = analyze(relabeled, quick()).literature_notes
    assert any("no open points" in note for note in notes)

    impostor = make_algebra(["e0", "e1"], {}, "aff_real")
    report = analyze(impostor, quick())
    assert report.parity_note is None
    assert not any("open points" in note for note in report.literature_notes)


def test_abelian_and_ad_faithful_flags(aff_real, h3, abelian3):
    report = analyze(aff_real, quick())
    assert report.ad_faithful and not report.abelian
    assert "ad faithful: yes" in render_text(report)
    report = analyze(h3, quick())
    assert not report.ad_faithful and not report.abelian
    report = analyze(abelian3, quick())
    assert report.abelian and not report.ad_faithful
