"""The ``construct`` command: derive a new document from an existing one."""

import argparse
import logging
from typing import Callable, Optional

from homalt.bform import (
    FormFlavor,
    derivation_symplectic,
    opposite_pe,
    opposite_symplectic,
    pe_untwist,
    pe_yau_twist,
)
from homalt.errors import UsageError
from homalt.handlers.output import collect_params, write_document
from homalt.homalg import alpha_power_twist, commutator_bracket, opposite, untwist, yau_twist
from homalt.opx import rb_derived_product, rb_symplectic
from homalt.postalt import bullet, rb_to_postalt, symplectic_split
from homalt.shell import AlgebraDocument, OperatorKind, from_algebra, load
from homalt.shell import document as doc

logger = logging.getLogger(__name__)

Params = dict[str, str]


def _phi(document: AlgebraDocument, params: Params):
    name = params.get('phi')
    return doc.to_map(document, name, OperatorKind.MORPHISM) if name else None


def _default_form(document: AlgebraDocument, flavor: FormFlavor) -> Optional[str]:
    return next((spec.name for spec in document.forms if spec.flavor is flavor), None)


def build_opposite(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    algebra = doc.to_algebra(document)
    name = params.get('form')
    if name is None:
        return from_algebra(opposite(algebra))
    form = doc.to_form(document, name)
    if form.flavor is FormFlavor.SUPER_SKEW:
        result, form = opposite_symplectic(algebra, form)
    else:
        result, form = opposite_pe(algebra, form, _phi(document, params))
    return from_algebra(result, {name: form})


def build_yau_twist(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    algebra = doc.to_algebra(document)
    beta = doc.to_map(document, params.get('beta'), OperatorKind.MORPHISM)
    name = params.get('form')
    if name is None:
        return from_algebra(yau_twist(algebra, beta))
    result, form, _ = pe_yau_twist(algebra, doc.to_form(document, name), beta)
    return from_algebra(result, {name: form})


def build_untwist(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    algebra = doc.to_algebra(document)
    name = params.get('form')
    if name is None:
        return from_algebra(untwist(algebra))
    result, form = pe_untwist(algebra, doc.to_form(document, name))
    return from_algebra(result, {name: form})


def build_alpha_power(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    raw = params.get('n', '1')
    if not raw.isdigit():
        raise UsageError(f"n must be a non-negative integer, got {raw!r}")
    return from_algebra(alpha_power_twist(doc.to_algebra(document), int(raw)))


def build_commutator(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    return from_algebra(commutator_bracket(doc.to_algebra(document)), doc.to_forms(document))


def build_rb_split(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    operator = doc.to_rota_baxter(document, params.get('R'))
    return doc.with_postalt(document, rb_to_postalt(doc.to_algebra(document), operator))


def build_rb_derived(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    operator = doc.to_rota_baxter(document, params.get('R'))
    return from_algebra(rb_derived_product(doc.to_algebra(document), operator))


def build_bullet(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    structure = doc.to_postalt(document)
    algebra = bullet(structure)
    return from_algebra(algebra.with_product(algebra.product, name=document.name or ''),
                        doc.to_forms(document))


def build_deriv_symplectic(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    algebra = doc.to_algebra(document)
    form = doc.to_form(document, params.get('form')
                       or _default_form(document, FormFlavor.SUPERSYMMETRIC))
    d = doc.to_derivation(document, params.get('D')).map
    return doc.with_form(document, params.get('name', 'omega'),
                         derivation_symplectic(algebra, form, d))


def build_rb_symplectic(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    algebra = doc.to_algebra(document)
    form = doc.to_form(document, params.get('form')
                       or _default_form(document, FormFlavor.SUPERSYMMETRIC))
    operator = doc.to_rota_baxter(document, params.get('R'))
    return doc.with_form(document, params.get('name', 'omega'),
                         rb_symplectic(algebra, form, operator))


def build_symplectic_split(document: AlgebraDocument, params: Params) -> AlgebraDocument:
    form = doc.to_form(document, params.get('form')
                       or _default_form(document, FormFlavor.SUPER_SKEW))
    return doc.with_postalt(document, symplectic_split(doc.to_algebra(document), form))


OPERATIONS: dict[str, tuple[Callable[[AlgebraDocument, Params], AlgebraDocument], set[str]]] = {
    'opposite': (build_opposite, {'form', 'phi'}),
    'yau-twist': (build_yau_twist, {'beta', 'form'}),
    'untwist': (build_untwist, {'form'}),
    'alpha-power': (build_alpha_power, {'n'}),
    'commutator': (build_commutator, set()),
    'rb-split': (build_rb_split, {'R'}),
    'rb-derived': (build_rb_derived, {'R'}),
    'bullet': (build_bullet, set()),
    'deriv-symplectic': (build_deriv_symplectic, {'D', 'form', 'name'}),
    'rb-symplectic': (build_rb_symplectic, {'R', 'form', 'name'}),
    'symplectic-split': (build_symplectic_split, {'form'}),
}


def construct(document: AlgebraDocument, operation: str, params: Params) -> AlgebraDocument:
    builder, allowed = OPERATIONS[operation]
    unknown = set(params) - allowed
    if unknown:
        raise UsageError(f"{operation} does not take {', '.join(sorted(unknown))}; "
                         f"allowed: {', '.join(sorted(allowed)) or 'none'}")
    logger.info("constructing %s", operation)
    return builder(document, params)


def register(subparsers) -> None:
    parser = subparsers.add_parser('construct', help='build a derived document')
    parser.add_argument('file', help='algebra document (JSON)')
    parser.add_argument('--op', required=True, choices=list(OPERATIONS))
    parser.add_argument('--param', action='append', metavar='NAME=VALUE',
                        help='operation parameter; may be repeated')
    parser.add_argument('-o', '--output', help='output path (default: stdout)')
    parser.set_defaults(handler=handle_construct)


def handle_construct(args: argparse.Namespace) -> int:
    document = load(args.file)
    result = construct(document, args.op, collect_params(args.param))
    write_document(result, args.output)
    return 0
