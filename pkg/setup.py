"""Build script: compiles the optional Cython rewriting kernel.

The package works without the extension (a pure-Python twin of the kernel
is selected at import time), so a failed compile downgrades to a warning
instead of aborting the install.  Set SOLVPOLY_NO_EXT=1 to skip the build.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: compiled kernel skipped ({exc}); "
                  "falling back to the pure-Python kernel", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernel", file=sys.stderr)


ext_modules = []
if os.environ.get("SOLVPOLY_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("solvpoly._kernel_cy", ["src/solvpoly/_kernel_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
