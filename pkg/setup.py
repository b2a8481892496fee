"""Build shim for the optional compiled core.

The package is pure Python plus one Cython extension holding the hot
numerical kernels (emsingular._core._fast).  If Cython or a C compiler
is unavailable the build falls back to the pure-Python reference
implementation; everything still works, just slower.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue if not."""

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
        sys.stderr.write(
            "\n*** emsingular: compiled core skipped (%s); "
            "using the pure-Python fallback ***\n\n" % exc
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "emsingular._core._fast",
        ["src/emsingular/_core/_fast.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
