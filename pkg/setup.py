"""Build script for the compiled GF(2) kernels.

The package works without the extension (a numpy fallback is selected at
import time), but the exhaustive length-10 classification is an order of
magnitude faster with it.
"""

from setuptools import Extension, setup
from Cython.Build import cythonize

ext_modules = cythonize(
    [Extension("ciskit._ext", ["src/ciskit/_ext.pyx"])],
    compiler_directives={
        "language_level": 3,
        "boundscheck": False,
        "wraparound": False,
        "cdivision": True,
    },
)

setup(ext_modules=ext_modules)
