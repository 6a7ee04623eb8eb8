from setuptools import Extension, setup

# The compiled kernel is optional: if Cython (or a C compiler) is missing the
# install still succeeds and wplrec.linalg falls back to the pure-Python kernel.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "wplrec._kernel",
                ["src/wplrec/_kernel.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
