"""Build script.  The compiled enumeration kernel is optional: if Cython or a
C compiler is unavailable the package still installs and falls back to the
pure-Python kernel at import time."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "vinberg._enum_cy",
                ["src/vinberg/_enum_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
