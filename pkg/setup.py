import os

from setuptools import Extension, setup

PYX = os.path.join("src", "dehnfill", "_ladder_cy.pyx")

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists(PYX):
    ext_modules = cythonize([Extension("dehnfill._ladder_cy", [PYX])], language_level=3)
else:
    # The compiled kernel is optional; dehnfill._ladder picks the pure-Python
    # fallback when the extension is absent.
    ext_modules = []

setup(ext_modules=ext_modules)
