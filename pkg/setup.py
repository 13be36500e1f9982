from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("affinecover.kernels._fast", ["src/affinecover/kernels/_fast.pyx"])],
        compiler_directives={"language_level": "3"},
    )
)
