import io
import os
import re
from setuptools import setup, find_packages


def read(*names, **kwargs):
    with io.open(
        os.path.join(os.path.dirname(__file__), *names),
        encoding=kwargs.get("encoding", "utf8")
    ) as fp:
        return fp.read()


def find_version(*file_paths):
    version_file = read(*file_paths)
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]",
                              version_file, re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError("Unable to find version string.")


with open("README.md", "r") as fh:
    long_description = fh.read()


setup(
    name='qmet',
    version=find_version("qmet", "__init__.py"),
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    description='Weighted quasi-metrics, weak partial metrics, semilattices and entropy',
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=[
        "sympy>=1.4",
        "numpy",
        "scipy",
        "tqdm",
        "ipython",
    ],
    extras_require={
        "tests": ["pytest", "pytest-cov", "flake8"],
        "docs": ["sphinx", "sphinx_rtd_theme"],
    },
    entry_points={
        "console_scripts": ["qmet=qmet.cli:main"],
    },
    license='MIT',
    classifiers=[
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'License :: OSI Approved :: MIT License',
        "Operating System :: OS Independent",
    ],
)
