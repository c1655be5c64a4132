""" Certified maxima of trigonometric polynomials on the circle """

from .engine import TrigSeries, ModulusSquared, RealPartSquared, maximize_squared, initial_grid_size
from .enclosure import ValueEnclosure, enclose_max_abs
