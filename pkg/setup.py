"""Optional compiled kernels; the package falls back to pure Python without them."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("sdmaps._ckernels", ["src/sdmaps/_ckernels.pyx"])],
        language_level=3,
        quiet=True,
    )

setup(ext_modules=ext_modules)
