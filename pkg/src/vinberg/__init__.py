"""Exact reflective-lattice toolkit for the forms -p x0^2 + x1^2 + ... + xn^2.

Runs Vinberg's fundamental-domain algorithm in exact arithmetic, decides
whether the reflection subgroup has finite covolume, and emits checkable
certificates of non-reflectivity when it does not.
"""

from vinberg.errors import CertificateError, ConsistencyError, DiagramError, VinbergError
from vinberg.forms import Form

__version__ = "1.0.0"

__all__ = [
    "Form",
    "VinbergError",
    "DiagramError",
    "ConsistencyError",
    "CertificateError",
    "__version__",
]
