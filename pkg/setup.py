# Builds the optional compiled counting core. If Cython is unavailable the
# package still installs and falls back to the pure-Python kernels at import.
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "commdeg.kernels._ctables",
                ["src/commdeg/kernels/_ctables.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
