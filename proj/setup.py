"""CMake bridge: builds the `_core` extension with the project's CMakeLists and
drops it into the `weingarten` package. The mirror used in CI lacks
scikit-build-core, so this is the plain setuptools variant of the same idea."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_path.parent.mkdir(parents=True, exist_ok=True)

        cfg = [
            "cmake",
            str(source_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DWG_BUILD_TESTS=OFF",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DWG_VERSION_INFO={self.distribution.get_version()}",
        ]
        subprocess.run(cfg, cwd=build_dir, check=True)
        jobs = str(os.cpu_count() or 2)
        subprocess.run(["cmake", "--build", str(build_dir), "--target", "_core", "-j", jobs],
                       check=True)

        built = list(build_dir.glob("bindings/_core*.so"))
        if not built:
            raise RuntimeError("CMake build did not produce the _core extension")
        self.copy_file(str(built[0]), str(ext_path))


setup(
    ext_modules=[CMakeExtension("weingarten._core")],
    cmdclass={"build_ext": CMakeBuild},
)
