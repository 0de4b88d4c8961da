from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install pure-Python only; subsym.kernels falls back at import.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "subsym._kernels_c",
                ["src/subsym/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
