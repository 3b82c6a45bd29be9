"""Build the optional compiled evaluation kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a missing Cython or C compiler only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("snchar._kernel", ["src/snchar/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
