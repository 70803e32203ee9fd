"""Build the compiled eigensolver core.

The extension is optional: when Cython or a C compiler is unavailable the
package installs without it and `supralap.eigen` falls back to the pure
NumPy kernels at import time.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "supralap._eigencore",
                ["src/supralap/_eigencore.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )

setup(ext_modules=ext_modules)
