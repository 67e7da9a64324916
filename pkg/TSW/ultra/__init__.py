from .filters import Ultrafilter, principal_ultrafilter, validate_ultrafilter, enumerate_ultrafilters
from .product import (
    Ultraproduct,
    ultraproduct_structures,
    relation_ultraproduct,
    team_ultraproduct,
    ultrapower,
)
from .los import LosReport, verify_los, ultrapower_map
