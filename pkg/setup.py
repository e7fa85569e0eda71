"""Build script: compiles the optional fast kernels.

The compiled extension is strictly optional.  If Cython or a C compiler is
unavailable the build falls through and almg runs on the pure-Python
kernels (almg._kernels_py), selected automatically at import time.
Set ALMG_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"almg: compiled kernels skipped ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"almg: building {ext.name} failed ({exc}); using pure-Python fallback")


ext_modules = []
if not os.environ.get("ALMG_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/almg/_kernels_cy.pyx"],
            language_level=3,
            compiler_directives={"boundscheck": False, "wraparound": False},
        )
    except ImportError:
        print("almg: Cython not available; using pure-Python fallback")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
