"""Named check suites run against a document, and checker verdicts by identity name."""

import logging
from enum import Enum
from typing import Optional, Union

from homalt.bform import (
    FormFlavor,
    check_phi_quadratic_malcev,
    check_pseudo_euclidean,
    check_symplectic,
    check_symplectic_malcev,
)
from homalt.errors import UsageError
from homalt.homalg import (
    AxiomReport,
    HomAlgebra,
    check_alternative,
    check_cyclic_associator,
    check_flexible,
    check_hom_associative,
    check_hom_malcev,
    check_multiplicative,
)
from homalt.opx import check_rb_form_compat, check_rota_baxter
from homalt.postalt import PostAltStructure, bullet, check_post_alternative, check_pre_alternative
from homalt.shell import document as doc
from homalt.shell.document import AlgebraDocument, OperatorKind
from homalt.shell.oracle import ALGEBRA_IDENTITIES, POST_ALTERNATIVE_IDENTITIES, lookup_identity

logger = logging.getLogger(__name__)


class Suite(str, Enum):
    """Check suites offered by the command line."""
    ALTERNATIVE = "alternative"
    PE = "pe"
    SYMPLECTIC = "symplectic"
    MALCEV = "malcev"
    POSTALT = "postalt"
    PREALT = "prealt"
    RB = "rb"


def run_suite(document: AlgebraDocument, suite: Union[Suite, str], form: Optional[str] = None,
              phi: Optional[str] = None, operator: Optional[str] = None) -> AxiomReport:
    """Report for one suite; ``form``, ``phi`` and ``operator`` name document parts."""
    suite = Suite(suite)
    logger.info("running the %s suite", suite.value)
    if suite is Suite.POSTALT:
        return check_post_alternative(doc.to_postalt(document))
    if suite is Suite.PREALT:
        return check_pre_alternative(doc.to_postalt(document))

    algebra = doc.to_algebra(document)
    phi_map = doc.to_map(document, phi, OperatorKind.MORPHISM) if phi else None
    if suite is Suite.ALTERNATIVE:
        return check_alternative(algebra)
    if suite is Suite.MALCEV:
        report = check_hom_malcev(algebra)
        if form is not None:
            bilinear = doc.to_form(document, form)
            if bilinear.flavor is FormFlavor.SUPER_SKEW:
                report.extend(check_symplectic_malcev(algebra, bilinear))
            else:
                report.extend(check_phi_quadratic_malcev(algebra, bilinear, phi_map))
        return report
    if suite is Suite.PE:
        name = form or _first_form(document, FormFlavor.SUPERSYMMETRIC)
        return check_pseudo_euclidean(algebra, doc.to_form(document, name), phi_map)
    if suite is Suite.SYMPLECTIC:
        name = form or _first_form(document, FormFlavor.SUPER_SKEW)
        return check_symplectic(algebra, doc.to_form(document, name))

    rota_baxter = doc.to_rota_baxter(document, operator)
    report = check_rota_baxter(algebra, rota_baxter)
    if form is not None:
        report.extend(check_rb_form_compat(doc.to_form(document, form), rota_baxter))
    return report


def _first_form(document: AlgebraDocument, flavor: FormFlavor) -> Optional[str]:
    for spec in document.forms:
        if spec.flavor is flavor:
            return spec.name
    return None


_ALGEBRA_CHECKERS = {
    'multiplicative': check_multiplicative,
    'hom-associative': check_hom_associative,
    'left-alternative': check_alternative,
    'right-alternative': check_alternative,
    'flexible': check_flexible,
    'cyclic-associator': check_cyclic_associator,
    'malcev-antisymmetry': check_hom_malcev,
    'malcev-identity': check_hom_malcev,
}


def checker_verdict(source: Union[HomAlgebra, PostAltStructure], identity: str) -> bool:
    """Verdict of the basis-tuple checker for a catalog identity."""
    lookup_identity(identity)
    if identity in ALGEBRA_IDENTITIES:
        algebra = bullet(source) if isinstance(source, PostAltStructure) else source
        return _ALGEBRA_CHECKERS[identity](algebra)[identity].holds
    if not isinstance(source, PostAltStructure):
        raise UsageError(f"identity {identity!r} needs a post-alternative structure")
    if identity in POST_ALTERNATIVE_IDENTITIES:
        return check_post_alternative(source)[identity].holds
    return check_pre_alternative(source)[identity].holds
