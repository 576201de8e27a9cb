"""Build shim: compiles the optional twisted-convolution extension.

The package works without it (a NumPy fallback is selected at import
time), so any failure to cythonize or compile downgrades to a pure
Python install instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "epistrict._twistconv",
                ["src/epistrict/_twistconv.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    print(f"skipping compiled extension ({exc}); using NumPy fallback")

setup(ext_modules=ext_modules)
