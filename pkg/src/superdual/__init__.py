"""Hook partitions, gl(m|n) and osp(2m|2n) characters, Howe duality and super duality."""

from .partitions import Partition, conjugate, is_hook, modified_frobenius, from_frobenius
from .polyring import LaurentSeries, VariableSet
from .symfunc import hook_schur, schur, symplectic_character

__all__ = [
    "Partition", "conjugate", "is_hook", "modified_frobenius", "from_frobenius",
    "LaurentSeries", "VariableSet", "hook_schur", "schur", "symplectic_character",
]
__version__ = "0.1.0"
