import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("HCFROB_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("hcfrob._fastpoly", ["src/hcfrob/_fastpoly.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: install the pure-Python fallback only
        pass

setup(ext_modules=ext_modules)
