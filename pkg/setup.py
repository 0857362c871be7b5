"""Build the optional Cython kernels; the package runs without them."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("EULERMAT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "eulermat._ckernels",
                    ["src/eulermat/_ckernels.pyx"],
                    extra_compile_args=["-O2", "-ffp-contract=off", "-fno-builtin-sin", "-fno-builtin-cos"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
