"""Finite quantales, *-quantales and quantale modules as explicit tables."""

from .congruence import (
    Congruence,
    enumerate_congruences,
    generated_congruence,
    is_simple,
    is_star_simple,
    maximal_congruences,
    quotient,
    simple_quotient_congruences,
)
from .constructions import (
    endomorphism_quantale,
    enumerate_quantales,
    product_quantale,
    rho_lambda_element,
)
from .io import parse, serialize
from .lattice import Lattice, make_chain, make_diamond_m5, make_powerset, validate_lattice
from .modules import QModule, dual_module, is_simple_module, validate_module
from .quantale import (
    Quantale,
    is_factor,
    is_star_factor,
    is_strictly_faithful,
    residuate_left,
    residuate_right,
    sided_elements,
    validate_quantale,
)
from .spectra import (
    CyclicSet,
    enumerate_cyclic_sets,
    is_cyclic_set,
    is_prime,
    is_semisimple,
    is_separating,
    prime_set,
)

__version__ = "0.1.0"
