import os

from setuptools import setup

# The triad-space enumeration kernel is also shipped as a Cython extension.
# Builds must succeed without Cython or a C compiler; chordpower.kernels
# falls back to the pure-Python kernel when the extension is absent.
ext_modules = []
if os.environ.get("CHORDPOWER_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("chordpower._enum_cy", ["src/chordpower/_enum_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
