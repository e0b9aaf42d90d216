from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension("qsigns._kernels_cy", ["src/qsigns/_kernels_cy.pyx"]),
]

setup(
    ext_modules=cythonize(extensions, language_level="3") if cythonize else [],
)
