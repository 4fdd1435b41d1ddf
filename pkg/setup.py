"""Builds the optional Cython kernel extension.

The package works without it (quilsim.kernels falls back to the numpy
implementation), so a failed cythonize is downgraded to a warning.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/quilsim/_kernels_cy.pyx",
        compiler_directives={"language_level": "3"},
    )
    include_dirs = [np.get_include()]
except Exception as exc:  # pragma: no cover
    warnings.warn(f"building without compiled kernels: {exc}")
    include_dirs = []

setup(ext_modules=ext_modules, include_dirs=include_dirs)
