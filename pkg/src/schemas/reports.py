from pydantic import BaseModel, Field

from src.models.enums import CasimirStatus, CheckVerdict, Closedness, Confidence, Overall


class PolynomialTerm(BaseModel):
    exps: list[int]
    coeff: str


class ImaginarySquare(BaseModel):
    value: str
    multiplicity: int = Field(ge=1)
    exact: bool = True
    interval: list[str] | None = None


class SpectralReport(BaseModel):
    char_poly: list[str]
    char_poly_text: str
    imag_part_squares: list[ImaginarySquare]
    sA_generators: list[str]
    closedness: Closedness
    confidence: Confidence
    tolerance: str | None = None
    type1_obstruction: bool
    notes: list[str] = []


class CasimirVerdictResponse(BaseModel):
    status: CasimirStatus
    degree_bound: int
    witness: list[PolynomialTerm] | None = None
    witness_text: str | None = None


class ChecklistEntry(BaseModel):
    condition: str
    verdict: CheckVerdict
    necessary: bool = True
    detail: str = ""


class AnalysisReport(BaseModel):
    name: str
    dim: int
    constants_hash: str
    seed: int
    solvable: bool
    nilpotent: bool
    abelian: bool
    center_dim: int
    ad_faithful: bool
    generic_rank: int
    index: int
    frobenius: bool
    generic_isotropy_dim: int
    generic_isotropy_abelian: bool
    generic_isotropy_contains_center: bool
    casimir: CasimirVerdictResponse
    parity_note: str | None = None
    factor_checklist: list[ChecklistEntry]
    factor_verdict: str
    spectral: SpectralReport | None = None
    overall: Overall
    caveats: list[str] = []
    literature_notes: list[str] = []
