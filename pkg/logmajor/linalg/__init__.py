from logmajor.linalg.decompositions import (  # noqa: F401
    Polar,
    contraction_factor,
    direct_sum,
    modulus_power,
    operator_norm,
    polar,
)
from logmajor.linalg.functions import ScalarFunction, apply_scalar_function  # noqa: F401
from logmajor.linalg.jacobi import HermitianEigen, SingularSpectrum, hermitian_eigen, svd  # noqa: F401
