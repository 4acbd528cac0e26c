"""Build script. Compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); the build therefore degrades gracefully when Cython or a C
compiler is unavailable.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hexamagic/_kernels.pyx"],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
