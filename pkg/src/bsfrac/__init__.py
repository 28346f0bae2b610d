"""Special-function numerics and fractional-integral operators: the
Bessel-Struve kernel, generalized Wright functions, Marichev-Saigo-Maeda
and pathway operators, with built-in identity verification suites.
"""

from ._backend import BACKEND
from .errors import (
    BsfracError,
    ConvergenceError,
    DomainError,
    DomainUnsupportedError,
    PoleError,
    PreconditionError,
    QuadratureError,
    TermCapError,
    UnknownSuiteError,
)
from .gammacore import SignedLogGamma, gamma_ratio, ln_gamma_signed, pochhammer
from .msm import (
    ClosedFormImage,
    FunctionKind,
    MsmParams,
    Side,
    msm_bs_closed_form,
    msm_power_image,
    msm_quadrature,
)
from .pathway import (
    PathwayDensityParams,
    PathwayParams,
    Regime,
    pathway_bs_closed_form,
    pathway_density,
    pathway_norm_const,
    pathway_power_image,
    pathway_quadrature,
)
from .quadrature import exp_sinh, tanh_sinh
from .series import (
    F3Args,
    SeriesEval,
    appell_f3,
    bessel_first_kind,
    bessel_struve_kernel,
    gauss_2f1,
    struve,
)
from .wright import WrightSpec, wright_delta, wright_eval

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BsfracError",
    "ClosedFormImage",
    "ConvergenceError",
    "DomainError",
    "DomainUnsupportedError",
    "F3Args",
    "FunctionKind",
    "MsmParams",
    "PathwayDensityParams",
    "PathwayParams",
    "PoleError",
    "PreconditionError",
    "QuadratureError",
    "Regime",
    "SeriesEval",
    "Side",
    "SignedLogGamma",
    "TermCapError",
    "UnknownSuiteError",
    "WrightSpec",
    "appell_f3",
    "bessel_first_kind",
    "bessel_struve_kernel",
    "exp_sinh",
    "gamma_ratio",
    "gauss_2f1",
    "ln_gamma_signed",
    "msm_bs_closed_form",
    "msm_power_image",
    "msm_quadrature",
    "pathway_bs_closed_form",
    "pathway_density",
    "pathway_norm_const",
    "pathway_power_image",
    "pathway_quadrature",
    "pochhammer",
    "struve",
    "tanh_sinh",
    "wright_delta",
    "wright_eval",
    "__version__",
]
