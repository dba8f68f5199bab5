"""Builds the _ribbon extension by delegating to the project's CMake."""
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        root = Path(__file__).parent.resolve()
        build = Path(self.build_temp).resolve()
        build.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            ["cmake", str(root), "-DSKBUILD=ON",
             f"-DPYTHON_EXECUTABLE={sys.executable}",
             "-DCMAKE_BUILD_TYPE=Release"],
            cwd=build, check=True)
        subprocess.run(["cmake", "--build", str(build), "--target", "_ribbon",
                        "-j"], cwd=build, check=True)
        out = Path(self.get_ext_fullpath(ext.name)).resolve()
        out.parent.mkdir(parents=True, exist_ok=True)
        built = next(build.glob("_ribbon*.so"))
        shutil.copy2(built, out)


setup(
    ext_modules=[Extension("ribbon_knots._ribbon", sources=[])],
    cmdclass={"build_ext": CMakeBuild},
)
