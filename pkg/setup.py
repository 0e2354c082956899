"""Build script: compiles the bitmask enumeration kernels when Cython is
available.  Set UARG_PURE_PYTHON=1 to skip the extension; the package then
runs on the pure-Python fallback in uarg._kernels_py."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("UARG_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/uarg/_kernels_cy.pyx"], language_level="3"
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
