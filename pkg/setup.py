import os
from setuptools import setup, find_packages

requirements = [
    "numpy>=1.13"
]

VERSION_PATH = os.path.join(os.path.dirname(__file__),
                            "numbergate", "VERSION.txt")
with open(VERSION_PATH, "r") as version_file:
    VERSION = version_file.read().strip()


setup(
    name='numbergate',
    version=VERSION,
    packages=find_packages(exclude=['test', 'test.*']),
    description="Numbergate - values of short partizan games and checks of "
                "the F1 / F2 number properties",
    url="https://github.com/numbergate/numbergate",
    author="Numbergate Development Team",
    license="Apache 2.0",
    classifiers=[
        "Environment :: Console",
        "License :: OSI Approved :: Apache Software License",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "Operating System :: Microsoft :: Windows",
        "Operating System :: MacOS",
        "Operating System :: POSIX :: Linux",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.7",
    install_requires=requirements,
    include_package_data=True,
    package_data={'numbergate': ['VERSION.txt']},
    entry_points={
        'console_scripts': ['numbergate=numbergate.cli:main'],
    },
    keywords="combinatorial game theory partizan games surreal numbers"
)
