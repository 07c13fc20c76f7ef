from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("safecycle._kernel", ["src/safecycle/_kernel.pyx"])],
        language_level=3,
    )
except ImportError:
    # The package falls back to the pure-Python kernel at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
