from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or a C compiler) the
# package still installs and falls back to the pure-Python kernels.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("stardi._kernels_cy", ["src/stardi/_kernels_cy.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
