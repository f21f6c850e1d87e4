"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension: ocpack.backend falls
back to the pure-Python kernels if ocpack._kernels is missing or fails to
build (the Extension is marked optional).
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ocpack._kernels",
                ["src/ocpack/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
