"""
Hirzebruch Gluing
=================
Exact glued Bridgeland stability data on Hirzebruch surfaces: central charges,
gluing perversity, walls, the pi(sigma) vector, divisorial-cone positions,
support constants and the moduli of skyscraper sheaves.
"""

from .arith import GaussianRational, HalfPlanePoint, Matrix2, Ordering, Sign, phase_approx, phase_compare
from .divisorial import PiSigma, boundary_position, pi_sigma, vertex_condition_m3, wall_boundary_report
from .errors import GluingError, InvariantError
from .gluing import (
    ComponentStability,
    GluingParams,
    perversity,
    skyscraper_jh,
    support_constant,
    wall_value,
    z_glued,
)
from .ktheory import ChernVector, Surface, chern_of, mukai_pair
from .moduli import ModuliSpace, ModuliVerdict, classify

__all__ = [
    'GaussianRational',
    'HalfPlanePoint',
    'Matrix2',
    'Ordering',
    'Sign',
    'phase_approx',
    'phase_compare',
    'PiSigma',
    'boundary_position',
    'pi_sigma',
    'vertex_condition_m3',
    'wall_boundary_report',
    'GluingError',
    'InvariantError',
    'ComponentStability',
    'GluingParams',
    'perversity',
    'skyscraper_jh',
    'support_constant',
    'wall_value',
    'z_glued',
    'ChernVector',
    'Surface',
    'chern_of',
    'mukai_pair',
    'ModuliSpace',
    'ModuliVerdict',
    'classify',
]
