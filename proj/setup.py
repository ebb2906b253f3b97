from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

setup(
    ext_modules=[
        Pybind11Extension(
            "skewcc._skewcc",
            sources=[
                "python/bindings.cpp",
                "src/gf.cpp",
                "src/ring.cpp",
                "src/skewpoly.cpp",
                "src/codes.cpp",
                "src/gray.cpp",
                "src/oracle.cpp",
                "src/oracle_bridge.cpp",
                "src/json_io.cpp",
                "src/examples.cpp",
            ],
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
