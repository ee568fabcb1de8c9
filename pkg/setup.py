"""Build script: compiles the optional fast kernels unless
INDIVLAB_SKIP_EXT is set, in which case the pure-Python backend is the
only one installed."""

import os

from setuptools import setup

if os.environ.get("INDIVLAB_SKIP_EXT"):
    ext_modules = []
else:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/indivlab/_fastcore.pyx"], language_level="3"
    )

setup(ext_modules=ext_modules)
