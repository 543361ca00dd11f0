"""Exact-arithmetic toolkit for noncrossing partition lattices adapted to
Motzkin words, the associated cumulant calculus, a symbolic replica-space
simulator, and the homogeneous decomposition of the free additive
convolution."""

__version__ = '0.1.0'

from . import words
from . import partitions
from . import adapted
from . import cumulants
from . import replicas
from . import convolution

__all__ = ['words', 'partitions', 'adapted', 'cumulants', 'replicas',
           'convolution', '__version__']
