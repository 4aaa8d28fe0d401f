from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "harnack._core",
        sources=[
            "src/hyperbolic.cpp",
            "src/herglotz.cpp",
            "src/bounds.cpp",
            "src/harness.cpp",
            "bindings/module.cpp",
        ],
        include_dirs=["include", "vendor"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
