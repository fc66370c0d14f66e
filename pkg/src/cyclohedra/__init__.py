"""Associahedra, cyclohedra, Farey tessellations and Thompson's group T."""

from .errors import CapacityError, InputError
from .triangulations import PartialTriangulation, enumerate_triangulations, enumerate_symmetric_triangulations

__version__ = "0.1.0"
