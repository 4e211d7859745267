"""Build script for the optional compiled point-counting kernels.

The package is pure Python except for rmtorus._ecount, a small Cython
module with the O(p^2) enumeration and character-sum loops.  If Cython or
a C compiler is unavailable the build degrades gracefully and the package
falls back to the pure-Python kernels at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: compiled kernels skipped ({exc}); "
            "rmtorus will use the pure-Python fallback",
            file=sys.stderr,
        )


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("rmtorus._ecount", ["src/rmtorus/_ecount.pyx"])],
        language_level=3,
    )
except ImportError:
    print("warning: Cython not found; building without compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
