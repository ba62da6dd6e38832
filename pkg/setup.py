"""Build the optional compiled kernels.

If Cython or a C compiler is missing the package still installs and falls
back to ``pomkit._purekernels`` at import time.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("POMKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("pomkit._ckernels", ["src/pomkit/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
