import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MFULL_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("mfull._speedups", ["src/mfull/_speedups.pyx"])],
            language_level="3",
        )
    except ImportError:
        # Pure-Python fallback in mfull._kernels_py is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
