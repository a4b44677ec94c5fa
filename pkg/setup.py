"""Build script.

The compiled extension is an optimization, not a requirement: if Cython or a
C compiler is missing (or CYCLOTOPE_PURE=1 is set), the build falls back to
the pure-Python kernels and the package stays fully functional.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow extension build failures and continue with the pure build."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: building the cyclotope._kernels extension failed "
            f"({exc!r}); falling back to the pure-Python kernels",
            file=sys.stderr,
        )


ext_modules = []
cmdclass = {}
if os.environ.get("CYCLOTOPE_PURE", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cyclotope._kernels", ["src/cyclotope/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )
        cmdclass = {"build_ext": optional_build_ext}
    except ImportError:
        print(
            "warning: Cython not available; installing without the compiled "
            "kernels",
            file=sys.stderr,
        )

setup(ext_modules=ext_modules, cmdclass=cmdclass)
