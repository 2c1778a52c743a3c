from .brieskorn import *
from .create_brieskorn_atlas import *
from .farey import *
from .fillability import *
from .mcg import *
from .surgery import *
from .sweep_seifert_coefficients import *
from .tabulate_menke_candidates import *
from .tabulate_twist_coefficients import *
