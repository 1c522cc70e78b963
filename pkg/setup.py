"""Build script: compiles the optional fast term-merge kernel.

The package is pure Python and fully functional without the extension;
if Cython or a C compiler is unavailable the build degrades gracefully
and `catpoly.backend` falls back to the pure-Python kernel.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Treat extension build failures as non-fatal."""

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
            "WARNING: building the catpoly._termops extension failed;\n"
            f"         falling back to the pure-Python kernel ({exc})",
            file=sys.stderr,
        )


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available; skipping fast kernel", file=sys.stderr)
        return []
    return cythonize(
        [Extension("catpoly._termops", ["src/catpoly/_termops.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
