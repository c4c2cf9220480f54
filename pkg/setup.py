"""Build script: compiles the optional Cython tableau kernels.

The package works without the extension (a pure-numpy fallback is selected
at import time), so a missing compiler or Cython only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "qnetsim.qstate.kernels._tableau_cy",
                ["src/qnetsim/qstate/kernels/_tableau_cy.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"qnetsim: skipping compiled tableau kernels ({exc}); "
          "pure-python fallback will be used")

setup(ext_modules=ext_modules)
