"""Build hooks: compile the optional eigensolver extension when a toolchain exists.

The package is fully functional without the extension; gainspectra._kernels
falls back to the pure-Python kernel at import time.
"""
import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("GAINSPECTRA_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "gainspectra._eigen_cy",
        sources=["src/gainspectra/_eigen_cy.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
