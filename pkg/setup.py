"""Build script: compiles the optional search kernel when Cython and a C
toolchain are available; the package falls back to the pure-Python kernel
otherwise (see lfcat._kernel)."""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Never let a failing C build block installation."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001  compiler/toolchain missing
            warnings.warn(f"compiled kernel skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            warnings.warn(f"compiled kernel skipped: {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not installed; using the pure-Python kernel")
        return []
    return cythonize(
        [Extension("lfcat._iso_c", ["src/lfcat/_iso_c.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
