from dataclasses import dataclass
from TSW.core.report import Defect
from TSW.maps.teammap import TeamMap, relations_up_to
from TSW.semantics.team import eval_team
from TSW.syntax.dialects import check_dialect
from TSW.syntax.printer import render
from TSW.ultra.product import ultraproduct_structures, relation_ultraproduct, team_ultraproduct
from TSW.utils.logger import get_logger

logger = get_logger(__name__)

# dialects whose transfer through ultraproducts is biconditional
BICONDITIONAL = ('fo', 'fot')


@dataclass(frozen=True)
class LosReport:
    """Both sides of the ultraproduct transfer for one formula.

    Attributes:
        formula: rendered formula.
        dialect: 'fo', 'fot' or 'foil'.
        factor_set: indices whose factor satisfies the formula.
        factor_side: factor_set ∈ U.
        product_side: the ultraproduct satisfies the formula on the team ultraproduct.
    """

    formula: str
    dialect: str
    factor_set: tuple
    factor_side: bool
    product_side: bool

    @property
    def ok(self):
        if self.dialect in BICONDITIONAL:
            return self.factor_side == self.product_side
        return not self.factor_side or self.product_side

    def defects(self):
        if self.ok:
            return []
        kind = 'los-biconditional' if self.dialect in BICONDITIONAL else 'los-forward'
        return [Defect(kind, (self.formula,), 'factor side {f}, product side {p}'.format(
            f=self.factor_side, p=self.product_side))]

    def to_dict(self):
        return {
            'formula': self.formula,
            'dialect': self.dialect,
            'factor_set': list(self.factor_set),
            'factor_side': self.factor_side,
            'product_side': self.product_side,
            'ok': self.ok,
        }


def verify_los(structures, teams, U, phi, dialect='fot', product=None):
    """Evaluates a formula factor-wise and in the ultraproduct.

    For 'fo' and 'fot' the two sides must agree; for 'foil' only the factor
    side must imply the product side.

    Args:
        structures: list of Structure, one per index.
        teams: list of Team over one variable domain.
        U: Ultrafilter.
        phi: formula of the dialect.
        product: optional precomputed Ultraproduct of the structures.

    Returns:
        LosReport.
    """
    if dialect not in BICONDITIONAL + ('foil',):
        message = 'Ultraproduct transfer is not defined for dialect {}.'.format(dialect)
        logger.error(message)
        raise ValueError(message)
    check_dialect(phi, dialect)
    if product is None:
        product = ultraproduct_structures(structures, U)
    values = [eval_team(A, X, phi) for A, X in zip(structures, teams)]
    factor_set = product.agreement(values)
    team = team_ultraproduct(teams, U, product)
    report = LosReport(
        render(phi),
        dialect,
        tuple(i for i in U.index if i in factor_set),
        factor_set in U,
        eval_team(product.structure, team, phi),
    )
    if not report.ok:
        logger.debug('Transfer fails for {}.'.format(report.formula))
    return report


def ultrapower_map(structure, U, family=None, max_arity=2, limit=2 ** 12):
    """ X -> ∏X/U from a structure to its ultrapower, over a family or every relation up to the cap. """
    product = ultraproduct_structures([structure] * len(U.index), U)
    relations = relations_up_to(structure, max_arity, limit) if family is None else family
    entries = {X: relation_ultraproduct([X] * len(U.index), U, product) for X in relations}
    return TeamMap(structure, product.structure, entries), product
