""" Values of symmetric XOR games: entangled and classical """

from xorgames.trigpoly import ValueEnclosure
from .quantum import (
    CirclePolynomial, SandwichReport,
    build_polynomial, eval_magnitude, global_max, entangled_value, corollary_sandwich, win_probability,
)
from .classical import (
    BiasProfile, ClassicalValue,
    krawtchouk_bias, bias_profile, classical_value, brute_force_value,
)
