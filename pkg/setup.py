"""Build script.

The compiled polynomial kernel is optional: if Cython or a C compiler is
missing the package installs with the pure-Python fallback only.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/p1reduce/_kernels/_poly_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
