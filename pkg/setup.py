import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from setuptools.errors import CCompilerError, ExecError, PlatformError
except ImportError:  # older setuptools
    from distutils.errors import (
        CCompilerError,
        DistutilsExecError as ExecError,
        DistutilsPlatformError as PlatformError,
    )


class optional_build_ext(build_ext):
    """Build the compiled kernels when a toolchain is available.

    A failed compile is not fatal: the package falls back to the pure-Python
    kernels in mzl._kernels._pure, selected at import time.
    """

    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError):
            self._skip("build_ext could not run")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, ValueError):
            self._skip(f"could not compile {ext.name}")

    @staticmethod
    def _skip(reason):
        print(f"WARNING: {reason}; mzl will use the pure-Python kernels")


ext_modules = []
if os.environ.get("MZL_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("mzl._kernels._core", ["src/mzl/_kernels/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(cmdclass={"build_ext": optional_build_ext}, ext_modules=ext_modules)
