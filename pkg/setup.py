"""Build the optional compiled kernels; the package works without them."""

from setuptools import setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:  # fall back to the pure-Python kernels
    cythonize = None


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler: keep the pure-Python path
            print(f"warning: compiled kernels not built ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} not built ({exc})")


ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        ["src/drinfeld/_kernels/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
