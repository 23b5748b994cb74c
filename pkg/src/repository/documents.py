import json
import logging
from pathlib import Path

from pydantic import ValidationError
from sympy.polys.domains import QQ

from src.errors import DocumentError
from src.models.algebra import LieAlgebra
from src.schemas.documents import FORMAT_VERSION, AlgebraDocument, BracketRecord, MatrixDocument
from src.services.lie import make_algebra
from src.services.matrices import RatMatrix
from src.services.rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)


def _location(err: ValidationError) -> tuple[str, str]:
    first = err.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "document"
    return first["msg"], location


def _prefixed(source: str | None, location: str) -> str:
    return f"{source}: {location}" if source else location


def algebra_to_document(g: LieAlgebra) -> AlgebraDocument:
    """
    The interchange form of an algebra: nonzero coefficients only, as rational strings.

    :param g: The algebra.
    :type g: LieAlgebra
    :return: The document.
    :rtype: AlgebraDocument
    """
    records = [
        BracketRecord(i=i, j=j, coeffs={k: format_rational(v) for k, v in enumerate(vector) if v})
        for (i, j), vector in g.brackets
    ]
    return AlgebraDocument(format_version=FORMAT_VERSION, name=g.name, dim=g.dim, basis=list(g.labels),
                           brackets=records)


def document_to_algebra(document: AlgebraDocument) -> LieAlgebra:
    """
    Build and Jacobi-check the algebra a document describes.

    :param document: A validated document.
    :type document: AlgebraDocument
    :return: The algebra.
    :rtype: LieAlgebra
    :raises JacobiError: If the constants violate the Jacobi identity.
    """
    brackets = {}
    for record in document.brackets:
        vector = [QQ.zero] * document.dim
        for k, text in record.coeffs.items():
            vector[k] = parse_rational(text)
        brackets[(record.i, record.j)] = vector
    return make_algebra(document.basis, brackets, document.name)


def parse_document(text: str, source: str | None = None) -> AlgebraDocument:
    """
    Parse and validate document text.

    :param text: JSON text.
    :type text: str
    :param source: File name prefixed to error locations.
    :type source: str | None
    :return: The validated document.
    :rtype: AlgebraDocument
    :raises DocumentError: With a line/column for JSON errors or a field path for schema errors.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(err.msg, _prefixed(source, f"line {err.lineno}, column {err.colno}")) from err
    try:
        return AlgebraDocument.model_validate(raw)
    except ValidationError as err:
        message, location = _location(err)
        raise DocumentError(message, _prefixed(source, location)) from err


def dumps(g: LieAlgebra) -> str:
    payload = algebra_to_document(g).model_dump(mode="json")
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read(path: Path | str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise DocumentError(f"cannot read file: {err.strerror}", str(path)) from err
    except UnicodeDecodeError as err:
        raise DocumentError(f"not valid UTF-8 at byte {err.start}", str(path)) from err


def load(path: Path | str) -> LieAlgebra:
    """
    Read an algebra file.

    :param path: Location of the JSON document.
    :type path: Path | str
    :return: The algebra with the Jacobi identity verified.
    :rtype: LieAlgebra
    :raises DocumentError: If the file cannot be read or is malformed.
    :raises JacobiError: If the constants violate the Jacobi identity.
    """
    g = document_to_algebra(parse_document(_read(path), str(path)))
    logger.debug("loaded %s (dim %d) from %s", g.name or "algebra", g.dim, path)
    return g


def save(g: LieAlgebra, path: Path | str):
    """
    Write an algebra file with sorted keys.

    :param g: The algebra.
    :type g: LieAlgebra
    :param path: Target file.
    :type path: Path | str
    :return: None
    :raises DocumentError: If the file cannot be written.
    """
    try:
        Path(path).write_text(dumps(g), encoding="utf-8")
    except OSError as err:
        raise DocumentError(f"cannot write file: {err.strerror}", str(path)) from err


def load_matrix(path: Path | str) -> RatMatrix:
    """
    Read a matrix file ``{"rows": [["0", "1"], ["-1", "0"]]}``.
    """
    try:
        raw = json.loads(_read(path))
    except json.JSONDecodeError as err:
        raise DocumentError(err.msg, f"{path}: line {err.lineno}, column {err.colno}") from err
    try:
        document = MatrixDocument.model_validate(raw)
    except ValidationError as err:
        message, location = _location(err)
        raise DocumentError(message, f"{path}: {location}") from err
    return RatMatrix.from_rows([[parse_rational(v) for v in row] for row in document.rows])


def save_matrix(A: RatMatrix, path: Path | str):
    payload = {"rows": [[format_rational(v) for v in row] for row in A.rows]}
    try:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    except OSError as err:
        raise DocumentError(f"cannot write file: {err.strerror}", str(path)) from err
