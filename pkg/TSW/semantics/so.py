from TSW.syntax.ast import SOSentence
from TSW.semantics.tarski import FirstOrderEvaluator, check_parameters
from TSW.utils.utils import get_budget
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


class SearchBudgetExceeded(RuntimeError):
    """Raised when an ESO prefix has more candidate instantiations than the budget.

    Attributes:
        size: number of candidate instantiations.
        budget: the configured budget.
    """

    def __init__(self, size, budget):
        self.size = size
        self.budget = budget
        super().__init__('Search space of {s} instantiations exceeds the budget {b}.'.format(s=size, b=budget))


def search_space(structure, sentence):
    total = 1
    for _, arity in sentence.prefix:
        total *= structure.count_relations(arity)
    return total


def eso_witness(structure, sentence, params=None, budget=None):
    """First instantiation of the prefix satisfying the matrix, or None.

    Instantiations are tried in lexicographic order of the prefix (first variable
    outermost, each ranging over relations in binary-encoding order); the search
    stops at the first witness.

    Args:
        budget: maximal number of instantiations; defaults to TEAMLOG_BUDGET or 2^24.
    """
    params = dict(params or {})
    if not isinstance(sentence, SOSentence):
        sentence = SOSentence((), sentence)
    budget = get_budget() if budget is None else budget
    size = search_space(structure, sentence)
    if size > budget:
        logger.error('ESO search space {s} exceeds budget {b}.'.format(s=size, b=budget))
        raise SearchBudgetExceeded(size, budget)
    check_parameters(structure, sentence, params)

    prefix = list(sentence.prefix)
    evaluator = FirstOrderEvaluator(structure, params)

    def search(i):
        if i == len(prefix):
            return evaluator.holds(sentence.matrix, {})
        name, arity = prefix[i]
        for relation in structure.all_relations(arity):
            evaluator.relations[name] = relation
            if search(i + 1):
                return True
        return False

    if search(0):
        return {name: evaluator.relations[name] for name, _ in prefix}
    return None


def eval_eso(structure, sentence, params=None, budget=None):
    """ A ⊨ ∃R⃗ φ(R⃗, params). """
    return eso_witness(structure, sentence, params, budget) is not None
