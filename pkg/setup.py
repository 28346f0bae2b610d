"""Build script: compiles the Cython hot-kernel core when a toolchain is
available, otherwise installs pure-Python only (the package falls back to
its twin implementation at import time)."""

import os

from setuptools import setup

ext_modules = []
try:
    if not os.path.exists("src/bsfrac/_ckernels.pyx"):
        raise ImportError
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "bsfrac._ckernels",
                ["src/bsfrac/_ckernels.pyx"],
                # keep FP semantics identical to the pure-Python twin
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
