from .relation import Relation, RelationFamily
from .structure import Signature, Structure, pure_set
from .team import Team, window, team_of_relation, relation_of_team, supplement, duplicate, restrict
from .algebra import (
    project,
    product,
    intersection,
    join_k,
    diagonal,
    closure,
    is_closed,
    term_graph,
)
