from .demand import (
    DEFAULT_WARMUP,
    InnovationSampler,
    gaussian_innovations,
    uniform_innovations,
    gen_demand
)
from .leadtime import make_explicit_dist, make_two_point_dist, gen_leadtimes

__all__ = [
    'DEFAULT_WARMUP',
    'InnovationSampler',
    'gaussian_innovations',
    'uniform_innovations',
    'gen_demand',
    'make_explicit_dist',
    'make_two_point_dist',
    'gen_leadtimes'
]
