import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("commtuple._expand_cy", ["src/commtuple/_expand_cy.pyx"])],
        language_level=3,
    )
except Exception as exc:
    # The package is fully functional on the pure-Python kernel.
    print("commtuple: building without compiled kernel (%s)" % exc, file=sys.stderr)

setup(ext_modules=ext_modules)
