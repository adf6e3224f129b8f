import os

from setuptools import Extension, setup

# The compiled scan kernels are optional: without Cython (or with
# XXRX_PURE=1) the package installs with the pure-Python fallback only.
ext_modules = []
if os.environ.get("XXRX_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("xxrx._scan", ["src/xxrx/_scan.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
