from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("stresslab._rowred", ["src/stresslab/_rowred.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback kernels are selected at import time.
    extensions = []

setup(ext_modules=extensions)
