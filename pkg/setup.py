import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BOXCOUNT_SKIP_SPEEDUPS") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("boxcount._speedups", ["src/boxcount/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        # pure-Python kernels are a complete fallback
        ext_modules = []

setup(ext_modules=ext_modules)
