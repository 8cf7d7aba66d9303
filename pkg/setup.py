import pathlib

from setuptools import setup

# Get the absolute path to the directory of setup.py.
CURRDIR = pathlib.Path(__file__).resolve().parent

# Get long description from the README.rst file.
with open(CURRDIR / "README.rst") as file:
    LONG_DESC = file.read()

# Get version number from the module's __init__.py file.
with open(CURRDIR / "src" / "ldirc" / "__init__.py") as src:
    VER = [
        line.split('"')[1] for line in src.readlines() if line.startswith("__version__")
    ][0]

setup(
    name="ldirc",
    version=VER,
    description="Exact capacity and scheme verification for the symmetric "
    "linear deterministic interference relay channel.",
    long_description=LONG_DESC,
    long_description_content_type="text/x-rst",
    license="MIT",
    package_dir={"": "src"},
    package_data={"ldirc": ["py.typed"]},
    packages=["ldirc", "ldirc.schemes"],
    include_package_data=True,
    python_requires=">=3.8",
    install_requires=["numpy>=1.22"],
    entry_points={"console_scripts": ["ldirc=ldirc.cli:main"]},
    keywords=[
        "python3",
        "information-theory",
        "interference-channel",
        "relay",
        "linear-deterministic",
        "capacity",
        "gdof",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
