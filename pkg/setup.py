from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The pure-Python kernel is used when the extension is absent.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("segmagic._kernel", ["src/segmagic/_kernel.pyx"])],
        language_level="3",
    )

setup(ext_modules=ext_modules)
