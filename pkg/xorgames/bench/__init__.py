""" Numerical and exact checks of the random-polynomial inequalities behind the value asymptotics """

from .moments import MomentBoundReport, exact_mgf, lemma1_check
from .rademacher import (
    C1, C2,
    CosinePolynomial, RademacherCosinePoly, LevelInterval, EventFrequency,
    max_abs_rademacher_poly, level_interval, rademacher_maxima, theorem_event_frequency,
)
from .paley_zygmund import PaleyZygmundReport, paley_zygmund_check
