#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from setuptools import setup
from setuptools import find_packages

# get requirements from file
with open("requirements.txt", "r", encoding="utf-8") as file_in:
    requirements = [line.strip("\n") for line in file_in.readlines()]
# get the long description from the README
with open("README.md", "r", encoding="utf-8") as file_in:
    long_description = file_in.read()
# get version from pycran/__init__.py
with open("pycran/__init__.py", "r", encoding="utf-8") as file_in:
    lines = file_in.readlines()
for line in lines:
    line = line.split()
    if len(line) < 1:
        continue
    if line[0] == "__version__":
        __version__ = str(line[2]).strip('"').strip("'")
# setup function
setup(
    name="pycran",
    python_requires="~=3.10",
    version=__version__,
    description="System level simulation of JT-CoMP clustering in a C-RAN with NOMA users.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=["C-RAN", "CoMP", "NOMA", "MU-MIMO", "coalition formation", "system level simulation"],
    classifiers=[
        "Programming Language :: Python :: 3.10",
        "License :: OSI Approved :: MIT License",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering",
        "Topic :: Communications",
    ],
    author="Edward J. Parkinson",
    author_email="saultyevil@gmail.com",
    license="MIT",
    install_requires=requirements,
    packages=find_packages(exclude=["tests"]),
    entry_points={"console_scripts": ["pycran = pycran.console.cli:cli"]},
)
