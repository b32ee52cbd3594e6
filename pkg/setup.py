from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "toruspin.kernels._fast",
                ["src/toruspin/kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python kernels are used when the extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
