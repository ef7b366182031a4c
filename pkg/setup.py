"""Build script. The compiled kernel is optional: if Cython (or a C
compiler) is unavailable the package installs anyway and falls back to the
pure-Python kernel at import time."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("pointpart._kernel_cy", ["src/pointpart/_kernel_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print(f"pointpart: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
