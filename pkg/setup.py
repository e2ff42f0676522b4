#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Setup script for ZicGdof
"""

from setuptools import setup, find_packages

from version import get_version_string

# Read requirements
with open('requirements.txt') as f:
    requirements = [line.split('#')[0].strip() for line in f if line.split('#')[0].strip()]

# Package metadata
setup(
    name="zicgdof",
    version=get_version_string(),
    description="GDoF regions of the MIMO Z interference channel with delayed CSIT",
    author="ZicGdof Team",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"resources": ["schemas/*.json"]},
    install_requires=[r for r in requirements if not r.startswith(("pytest", "hypothesis"))],
    extras_require={
        "test": [r for r in requirements if r.startswith(("pytest", "hypothesis"))],
    },
    entry_points={
        'console_scripts': [
            'zicgdof=src.main:main',
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
