from .fot import fot_to_fo
from .foil import foil_to_eso
from .coding import chi_plus, encode_relations, encode_sentence
from .definitions import constancy_definition, team_characterisation
