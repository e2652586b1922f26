from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python fallback only
    cythonize = None


class optional_build_ext(build_ext):
    """Compile the counting kernel when possible; never fail the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"kunzcount: compiled kernel skipped ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"kunzcount: compiled kernel skipped ({exc})")


ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("kunzcount._kernel", ["src/kunzcount/_kernel.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
