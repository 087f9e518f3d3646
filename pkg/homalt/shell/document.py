"""JSON algebra documents.

A document carries one superspace with its product, an optional twist matrix,
named bilinear forms, named operators and an optional post-alternative
structure. Rationals are always strings such as "3/4".
"""

import json
import logging
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from pydantic.alias_generators import to_camel

from homalt.errors import ParseError, RangeError, SchemaError, UsageError
from homalt.gsla import GradedMap, SuperSpace, identity_matrix, zeros
from homalt.homalg import HomAlgebra
from homalt.bform import BilinearFormRep, FormFlavor, FormParity
from homalt.opx import DerivationCandidate, RotaBaxterOp
from homalt.postalt import PostAltStructure
from homalt.utils import format_rational, parse_rational

logger = logging.getLogger(__name__)


class _Schema(BaseModel):
    model_config = ConfigDict(extra='forbid', alias_generator=to_camel, populate_by_name=True)


class TensorEntry(_Schema):
    i: int
    j: int
    k: int
    value: str


class MatrixEntry(_Schema):
    i: int
    j: int
    value: str


class OperatorKind(str, Enum):
    """What an operator in a document is meant to be."""
    DERIVATION = "derivation"
    ROTA_BAXTER = "rotabaxter"
    MORPHISM = "morphism"


class FormSpec(_Schema):
    name: str
    flavor: FormFlavor = FormFlavor.SUPERSYMMETRIC
    parity: FormParity = FormParity.EVEN
    gram: list[MatrixEntry] = Field(default_factory=list)


class OperatorSpec(_Schema):
    name: str
    kind: OperatorKind
    matrix: list[list[str]]
    degree: int = 0
    power: int = 0
    weight: str = "0"


class PostAltSpec(_Schema):
    prec: list[TensorEntry] = Field(default_factory=list)
    succ: list[TensorEntry] = Field(default_factory=list)
    dot: list[TensorEntry] = Field(default_factory=list)


class AlgebraDocument(_Schema):
    even_dim: int = Field(ge=0)
    odd_dim: int = Field(ge=0)
    name: Optional[str] = None
    basis_names: Optional[list[str]] = None
    product: list[TensorEntry] = Field(default_factory=list)
    alpha: Optional[list[list[str]]] = None
    forms: list[FormSpec] = Field(default_factory=list)
    operators: list[OperatorSpec] = Field(default_factory=list)
    postalt: Optional[PostAltSpec] = None

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim


def _reject_duplicate_keys(pairs: list[tuple[str, object]]) -> dict:
    result = {}
    for key, value in pairs:
        if key in result:
            raise SchemaError(f"duplicate key {key!r}")
        result[key] = value
    return result


def parse(text: Union[str, bytes]) -> AlgebraDocument:
    """Parse and validate document text."""
    try:
        payload = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except (ValueError, RecursionError) as exc:
        # JSONDecodeError and UnicodeDecodeError are both ValueErrors
        raise ParseError(f"malformed JSON: {exc}") from exc
    try:
        document = AlgebraDocument.model_validate(payload)
    except ValidationError as exc:
        raise SchemaError(f"document does not follow the schema: {exc}") from exc
    validate(document)
    return document


def _read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc}") from exc


def load(path: Union[str, Path]) -> AlgebraDocument:
    return parse(_read_text(path))


def serialize(document: AlgebraDocument) -> str:
    payload = document.model_dump(mode='json', by_alias=True, exclude_none=True)
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def dump(document: AlgebraDocument, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize(document), encoding='utf-8')


def _check_index(index: int, n: int, where: str) -> None:
    if not 0 <= index < n:
        raise RangeError(f"{where}: index {index} outside 0..{n - 1}")


def _check_tensor_entries(entries: list[TensorEntry], n: int, where: str) -> None:
    seen = set()
    for entry in entries:
        for index in (entry.i, entry.j, entry.k):
            _check_index(index, n, where)
        key = (entry.i, entry.j, entry.k)
        if key in seen:
            raise SchemaError(f"{where}: duplicate entry {key}")
        seen.add(key)
        parse_rational(entry.value)


def _check_square(rows: list[list[str]], n: int, where: str) -> None:
    if len(rows) != n or any(len(row) != n for row in rows):
        raise SchemaError(f"{where}: expected a {n}x{n} matrix")
    for row in rows:
        for value in row:
            parse_rational(value)


def validate(document: AlgebraDocument) -> None:
    """Index ranges, rational syntax and duplicates."""
    n = document.dim
    if document.basis_names is not None and len(document.basis_names) != n:
        raise SchemaError(f"{len(document.basis_names)} basis names for dimension {n}")
    _check_tensor_entries(document.product, n, 'product')
    if document.alpha is not None:
        _check_square(document.alpha, n, 'alpha')
    names = set()
    for form in document.forms:
        if form.name in names:
            raise SchemaError(f"duplicate form name {form.name!r}")
        names.add(form.name)
        seen = set()
        for entry in form.gram:
            _check_index(entry.i, n, f'form {form.name}')
            _check_index(entry.j, n, f'form {form.name}')
            if (entry.i, entry.j) in seen:
                raise SchemaError(f"form {form.name}: duplicate entry {(entry.i, entry.j)}")
            seen.add((entry.i, entry.j))
            parse_rational(entry.value)
    names = set()
    for operator in document.operators:
        if operator.name in names:
            raise SchemaError(f"duplicate operator name {operator.name!r}")
        names.add(operator.name)
        _check_square(operator.matrix, n, f'operator {operator.name}')
        parse_rational(operator.weight)
    if document.postalt is not None:
        for label in ('prec', 'succ', 'dot'):
            _check_tensor_entries(getattr(document.postalt, label), n, f'postalt.{label}')


def _tensor(entries: list[TensorEntry], n: int) -> np.ndarray:
    tensor = zeros((n, n, n))
    for entry in entries:
        tensor[entry.i, entry.j, entry.k] = parse_rational(entry.value)
    return tensor


def _dense(rows: list[list[str]]) -> np.ndarray:
    n = len(rows)
    matrix = zeros((n, n))
    for r, row in enumerate(rows):
        for c, value in enumerate(row):
            matrix[r, c] = parse_rational(value)
    return matrix


def to_space(document: AlgebraDocument) -> SuperSpace:
    names = tuple(document.basis_names) if document.basis_names else ()
    return SuperSpace(document.even_dim, document.odd_dim, names)


def to_alpha(document: AlgebraDocument) -> GradedMap:
    space = to_space(document)
    if document.alpha is None:
        return GradedMap.identity(space)
    return GradedMap(space, _dense(document.alpha), 0)


def to_algebra(document: AlgebraDocument) -> HomAlgebra:
    space = to_space(document)
    return HomAlgebra(space, _tensor(document.product, space.dim), to_alpha(document),
                      document.name or '')


def _pick(items: list, name: Optional[str], what: str):
    if not items:
        raise UsageError(f"document has no {what}")
    if name is None:
        return items[0]
    for item in items:
        if item.name == name:
            return item
    raise UsageError(f"no {what} named {name!r}; have {[item.name for item in items]}")


def to_form(document: AlgebraDocument, name: Optional[str] = None) -> BilinearFormRep:
    spec = _pick(document.forms, name, 'form')
    n = document.dim
    gram = zeros((n, n))
    for entry in spec.gram:
        gram[entry.i, entry.j] = parse_rational(entry.value)
    return BilinearFormRep(to_space(document), gram, spec.flavor, spec.parity)


def load_operator(path: Union[str, Path], dim: int) -> OperatorSpec:
    """A standalone operator file holding one operator object."""
    text = _read_text(path)
    try:
        payload = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except (ValueError, RecursionError) as exc:
        raise ParseError(f"malformed JSON in {path}: {exc}") from exc
    try:
        spec = OperatorSpec.model_validate(payload)
    except ValidationError as exc:
        raise SchemaError(f"{path} is not an operator: {exc}") from exc
    _check_square(spec.matrix, dim, f'operator {spec.name}')
    parse_rational(spec.weight)
    return spec


def operator_spec(document: AlgebraDocument, name: Optional[str] = None,
                  kind: Optional[OperatorKind] = None) -> OperatorSpec:
    """Operator by name, or from an operator file when ``name`` ends in .json."""
    if name is not None and name.endswith('.json'):
        spec = load_operator(name, document.dim)
        if kind is not None and spec.kind != kind:
            raise UsageError(f"{name} holds a {spec.kind.value} operator, not a {kind.value}")
        return spec
    candidates = [op for op in document.operators if kind is None or op.kind == kind]
    return _pick(candidates, name, f'{kind.value} operator' if kind else 'operator')


def to_map(document: AlgebraDocument, name: Optional[str] = None,
           kind: Optional[OperatorKind] = None) -> GradedMap:
    spec = operator_spec(document, name, kind)
    return GradedMap(to_space(document), _dense(spec.matrix), spec.degree)


def to_rota_baxter(document: AlgebraDocument, name: Optional[str] = None) -> RotaBaxterOp:
    spec = operator_spec(document, name, OperatorKind.ROTA_BAXTER)
    return RotaBaxterOp(GradedMap(to_space(document), _dense(spec.matrix), spec.degree),
                        parse_rational(spec.weight))


def to_derivation(document: AlgebraDocument, name: Optional[str] = None) -> DerivationCandidate:
    spec = operator_spec(document, name, OperatorKind.DERIVATION)
    return DerivationCandidate(GradedMap(to_space(document), _dense(spec.matrix), spec.degree),
                               spec.power)


def to_postalt(document: AlgebraDocument) -> PostAltStructure:
    if document.postalt is None:
        raise UsageError("document has no post-alternative structure")
    n = document.dim
    spec = document.postalt
    return PostAltStructure(to_space(document), _tensor(spec.prec, n), _tensor(spec.succ, n),
                            _tensor(spec.dot, n), to_alpha(document))


def _tensor_entries(tensor: np.ndarray) -> list[TensorEntry]:
    return [TensorEntry(i=int(i), j=int(j), k=int(k), value=format_rational(tensor[i, j, k]))
            for i, j, k in np.argwhere(tensor != 0)]


def _dense_rows(matrix: np.ndarray) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in matrix]


def form_spec(name: str, form: BilinearFormRep) -> FormSpec:
    gram = [MatrixEntry(i=int(i), j=int(j), value=format_rational(form.gram[i, j]))
            for i, j in np.argwhere(form.gram != 0)]
    return FormSpec(name=name, flavor=form.flavor, parity=form.parity, gram=gram)


def map_spec(name: str, graded_map: GradedMap, kind: OperatorKind,
             power: int = 0, weight: Fraction = Fraction(0)) -> OperatorSpec:
    return OperatorSpec(name=name, kind=kind, matrix=_dense_rows(graded_map.matrix),
                        degree=graded_map.degree, power=power, weight=format_rational(weight))


def postalt_spec(structure: PostAltStructure) -> PostAltSpec:
    return PostAltSpec(prec=_tensor_entries(structure.prec), succ=_tensor_entries(structure.succ),
                       dot=_tensor_entries(structure.dot))


def from_algebra(algebra: HomAlgebra, forms: Optional[dict[str, BilinearFormRep]] = None,
                 operators: Optional[list[OperatorSpec]] = None,
                 postalt: Optional[PostAltStructure] = None) -> AlgebraDocument:
    """Document for an algebra; the twist is omitted when it is the identity."""
    space = algebra.space
    default_names = tuple(f'e{i}' for i in range(space.dim))
    alpha = None
    if space.dim and not np.all(algebra.alpha.matrix == identity_matrix(space.dim)):
        alpha = _dense_rows(algebra.alpha.matrix)
    return AlgebraDocument(
        even_dim=space.even_dim,
        odd_dim=space.odd_dim,
        name=algebra.name or None,
        basis_names=list(space.basis_names) if space.basis_names != default_names else None,
        product=_tensor_entries(algebra.product),
        alpha=alpha,
        forms=[form_spec(name, form) for name, form in (forms or {}).items()],
        operators=list(operators or []),
        postalt=postalt_spec(postalt) if postalt is not None else None,
    )


def with_postalt(document: AlgebraDocument, structure: PostAltStructure) -> AlgebraDocument:
    return document.model_copy(update={'postalt': postalt_spec(structure)})


def to_forms(document: AlgebraDocument) -> dict[str, BilinearFormRep]:
    return {spec.name: to_form(document, spec.name) for spec in document.forms}


def with_form(document: AlgebraDocument, name: str, form: BilinearFormRep) -> AlgebraDocument:
    """Add a form, replacing one of the same name."""
    forms = [spec for spec in document.forms if spec.name != name] + [form_spec(name, form)]
    return document.model_copy(update={'forms': forms})
