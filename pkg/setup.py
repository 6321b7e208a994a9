from setuptools import setup, find_packages

version = {}
with open("isokam/version.py") as fp:
    exec(fp.read(), version)

setup(
    name="isokam",
    version=version["__version__"],
    author="isokam developers",
    description="Numerics for random isometric systems on spheres: spectral gaps, "
    "Lyapunov spectra, strain expansions and KAM linearization steps.",
    long_description=open("pypi-readme.rst").read(),
    license="MIT",
    keywords="random dynamical systems Lyapunov exponents spherical harmonics KAM",
    scripts=["scripts/isokam"],
    entry_points={"console_scripts": ["isokam-cli = isokam.cli:main"]},
    packages=find_packages(exclude=["docs", "tests", "tests.*"]),
    include_package_data=True,
    install_requires=[
        "numpy",
        "scipy",
        "pandas",
        "proglog",
        "flametree",
        "fuzzywuzzy",
        "python-Levenshtein",
    ],
    extras_require={"tests": ["pytest", "hypothesis"]},
)
