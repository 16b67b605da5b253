from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "stabpath._kernels",
                ["src/stabpath/_kernels.pyx"],
                language="c++",
            )
        ],
        language_level=3,
    )
except ImportError:
    # The package runs on the pure-Python kernel fallback when the
    # compiled extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
