from setuptools import find_packages, setup

version = dict()
with open("termcode/version.py") as file:
    exec(file.read(), version)

test_requirements = [
    "pytest==7.0.0",
    "pytest-cov==3.0.0",
    "pytest-xdist==2.5.0",
    "hypothesis~=6.98.0",
]
development_requirements = [
    "black==22.3.0",
    "isort==5.10.1",
    "flake8==4.0.1",
    "pre-commit==2.17.0",
]

setup(
    name="termcode",
    version=version["__version__"],
    description="Counting, bounding and searching solutions of term coding and dispersion systems",
    license="MIT",
    keywords="term-coding guessing-number network-coding dispersion entropy finite-model",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python",
    ],
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.8",
    install_requires=[
        "numpy~=1.26.4",
        "networkx~=3.2",
        "tqdm==4.66.3",
        "decorator~=4.3.0",
        "pydantic==2.10.6",
    ],
    extras_require={
        "tests": test_requirements,
        "development": test_requirements + development_requirements,
    },
    entry_points={"console_scripts": ["tc=scripts.cli.cli:main"]},
)
