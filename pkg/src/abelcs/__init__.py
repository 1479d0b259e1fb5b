"""Abelian Chern-Simons and Reshetikhin-Turaev invariants of rational homology spheres
from integer surgery presentations."""

from ._kernels import BACKEND
from .cyclotomic import ComplexValue, CyclotomicSum, evaluate, is_exactly_zero
from .errors import *  # noqa: F401,F403
from .homology import (
    LinkingForm,
    TorsionPresentation,
    analyze,
    linking_form,
    self_linking_oracle,
    torsion_presentation,
)
from .invariants import (
    InvariantReport,
    partition_function,
    reciprocity_check,
    rt_invariant,
    verify_relation,
)
from .linalg import SmithDecomposition, determinant, inverse_rational, signature, smith_normal_form
from .matrix import IntMatrix, RatMatrix
from .surgery import SurgeryPresentation, catalog, parse_presentation, serialize

__version__ = "0.1.0"
