#! /usr/bin/env python

from setuptools import setup


def get_version():
    d = {}
    try:
        with open("psolenoid/__init__.py") as f:
            exec(f.read(), d)
    except Exception:
        pass
    return d["__version__"]

version = get_version()


def main():
    install_requires = ["altgraph>=0.16", "sympy>=1.9"]

    setup(name="psolenoid",
          version=version,
          entry_points={
             "console_scripts": ['psolenoid = psolenoid:main', 'p-solenoid = psolenoid:main']},
          install_requires=install_requires,
          extras_require={"test": ["pytest", "hypothesis", "jsonschema"]},
          packages=['psolenoid'],
          python_requires=">=3.8",
          zip_safe=False,
          description="exact computations on P-adic solenoids: coverings, fibers, periodic points",
          platforms="any",
          license="zlib/libpng license",
          classifiers=[
            "Development Status :: 3 - Alpha",
            "License :: OSI Approved :: zlib/libpng License",
            "Intended Audience :: Science/Research",
            "Programming Language :: Python",
            "Programming Language :: Python :: 3",
            "Topic :: Scientific/Engineering :: Mathematics"],
          long_description=open("README.rst").read())

if __name__ == '__main__':
    main()
