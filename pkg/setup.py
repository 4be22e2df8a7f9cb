from setuptools import Extension, setup
from Cython.Build import cythonize

# No -ffast-math / -march=native: the compiled coder must produce
# bit-identical results to the pure-Python fallback (IEEE double, no FMA).
ext_modules = [
    Extension(
        "infomech.complexity._kernels",
        sources=["src/infomech/complexity/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(ext_modules, language_level=3))
