# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# setup.py

"""Install voxellate with pip."""

from setuptools import setup, find_packages

setup(
    name="voxellate",
    version="0.1.0",
    description="Voronoi, Johnson-Mehl and Laguerre tessellations as voxel images",
    license="Apache-2.0",
    packages=find_packages(
        where="lib",
        include=["voxellate*"],
    ),
    package_dir={"": "lib"},
    package_data={"voxellate.config": ["config.yaml"]},
    install_requires=["numpy", "scipy", "Pillow", "PyYAML"],
    entry_points={
        "console_scripts": [
            "voxellate = voxellate.cli:main",
        ],
    },
    python_requires=">=3.10",
    classifiers=[
        "Development State :: 1 - Planning",
        "License :: OSI Approved :: Apache-2.0",
        "Operating System :: Linux",
        "Programming Language :: Python :: 3",
    ],
)
