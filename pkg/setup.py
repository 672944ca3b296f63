"""Build script for the optional compiled kernel module.

The package works without the extension (a pure-Python backend is selected
at import time), so a failed compile downgrades to a warning instead of
aborting the install.
"""

import os
import sys
import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({exc}); pure-Python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({exc}); pure-Python backend will be used")


ext_modules = []
if cythonize is not None and not os.environ.get("SNAKEDNA_PURE_PYTHON"):
    from setuptools import Extension

    # -ffp-contract=off: the logistic recurrence must evaluate with plain IEEE
    # double ops so the compiled stream is bit-identical to the pure backend.
    compile_args = ["-O2", "-ffp-contract=off"] if sys.platform != "win32" else ["/O2"]
    ext_modules = cythonize(
        [
            Extension(
                "snakedna._kernels._native",
                ["src/snakedna/_kernels/_native.pyx"],
                extra_compile_args=compile_args,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
