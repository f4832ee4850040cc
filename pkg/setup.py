import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("MEYER_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "meyer._kernels_c",
        ["src/meyer/_kernels_c.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
