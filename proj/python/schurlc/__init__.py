"""Exact Schur-function arithmetic and induced log-concavity checks for
uniform-matroid invariants (Kazhdan-Lusztig, inverse Kazhdan-Lusztig, Z and
characteristic polynomials)."""

from schurlc._schurlc import *  # noqa: F401,F403
from schurlc._schurlc import __version__  # noqa: F401
