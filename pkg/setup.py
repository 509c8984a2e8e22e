"""Build script: compiles the optional bitset-kernel extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
install proceeds and specconn falls back to the pure-Python kernels at
import time. Set SPECCONN_NO_EXT=1 to skip the extension build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to a warning instead of failing the install."""

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
            f"warning: building the specconn._kernels extension failed ({exc}); "
            "the pure-Python kernels will be used instead",
            file=sys.stderr,
        )


def extensions():
    if os.environ.get("SPECCONN_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "warning: Cython not available; skipping the specconn._kernels "
            "extension (pure-Python kernels will be used)",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [
            Extension(
                "specconn._kernels",
                ["src/specconn/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
