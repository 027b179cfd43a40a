"""cbmfd: exact tools for Cayley-Bacharach point configurations and
minimal fibering degrees.

The package computes, with exact rational arithmetic throughout:

* ranks and kernels of rational matrices (``exact_linalg``),
* evaluation matrices of point configurations in projective space
  (``projective``), homogeneous integer forms (``forms``),
* Cayley-Bacharach checks, certified generators and residuals
  (``cayley_bacharach``), plane-curve interpolation (``curve_search``),
* a randomized search harness for low-degree interpolation questions
  (``picoco``),
* minimal fibering degrees of polarized lattice models, including the
  self-product-of-an-elliptic-curve model, with cone cross-sections and
  SVG rendering (``mfd_cone``, ``cross_section``),
* the degree-bound calculators that consume those quantities
  (``bounds``).

A single command line entry point ``cbmfd`` exposes the lot.
"""

__version__ = "0.1.0"

from .errors import CbmfdError

__all__ = ["CbmfdError", "__version__"]
