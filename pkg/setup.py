"""Builds the optional compiled kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("WALKWAYS_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("walkways._core", ["src/walkways/_core.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:  # no Cython: pure-Python fallback only
        ext_modules = []

setup(ext_modules=ext_modules)
