"""Exact computations with axial algebras of Monster type."""

from .algebra import (Algebra, SubspaceBasis, adjoint_matrix, direct_sum,
                      eigenspace, identity_of, multiply, subalgebra_generated)
from .catalog import (NS_TYPES, identity_length, make_law, matsuo_algebra,
                      norton_sakuma)
from .exactnum import (Matrix, QuadraticField, is_positive_definite,
                       kernel_basis, rank)
from .forms import (BilinearForm, frobenius_space, gram_from_shape,
                    is_frobenius, length, orthogonal_complement)
from .fusion import (Automorphism, AxisReport, FusionLaw, axet_closure,
                     check_axis, find_twins, is_automorphism, is_jordan_axis,
                     miyamoto_map)

__version__ = "0.1.0"
