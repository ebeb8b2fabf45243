import os

from setuptools import setup

# The compiled planarity kernel is optional: when Cython or a C compiler is
# missing the package installs anyway and falls back to the pure-Python
# implementation at import time.  Set SUNCROSS_REQUIRE_CYTHON=1 to make a
# failed kernel build abort the install instead.

ext_modules = []
if os.environ.get("SUNCROSS_NO_CYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "suncross.planarity._lr_cython",
                    ["src/suncross/planarity/_lr_cython.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        if os.environ.get("SUNCROSS_REQUIRE_CYTHON") == "1":
            raise
        ext_modules = []

setup(ext_modules=ext_modules)
