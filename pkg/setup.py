from setuptools import setup, Extension

# The compiled kernel is optional: scalars.py falls back to the pure-Python
# implementation when the extension is absent.
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("shufflealg._kernel", ["src/shufflealg/_kernel.pyx"])],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
