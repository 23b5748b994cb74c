import enum


class Closedness(enum.Enum):
    closed: str = "closed"
    not_closed: str = "not_closed"
    unknown: str = "unknown"


class Confidence(enum.Enum):
    exact: str = "exact"
    numeric: str = "numeric"


class CheckVerdict(enum.Enum):
    passed: str = "pass"
    failed: str = "fail"
    unknown: str = "unknown"


class CasimirStatus(enum.Enum):
    all_constant: str = "all_constant_up_to_d"
    nonconstant_found: str = "nonconstant_found"


class Overall(enum.Enum):
    frobenius_type_I: str = "frobenius_type_I"
    factor_candidate: str = "factor_candidate"
    not_factor: str = "not_factor"
    inconclusive: str = "inconclusive"


class ThetaKind(enum.Enum):
    rational: str = "rational"
    symbolic_irrational: str = "symbolic_irrational"


class OutputFormat(enum.Enum):
    text: str = "text"
    machine: str = "machine"
