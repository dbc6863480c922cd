"""Build the optional Cython kernel; the package falls back to the pure
Python kernel when the extension is unavailable."""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/braidkit/_kernel_c.pyx"], language_level=3
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
