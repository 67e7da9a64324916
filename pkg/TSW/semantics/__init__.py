from .tarski import eval_tarski, eval_fo_with_relations, FirstOrderEvaluator
from .team import eval_team, TeamEvaluator
from .so import eval_eso, eso_witness, SearchBudgetExceeded
