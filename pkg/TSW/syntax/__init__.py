from .ast import free_vars, size, substitute
from .parser import parse_formula, FormulaSyntaxError
from .printer import render
from .dialects import check_dialect, DialectError
from .enumerate import enumerate_formulas, sample_formula
