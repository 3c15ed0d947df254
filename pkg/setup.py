import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="bolsect",
    version="0.1.0",
    author="Christopher Henderson",
    author_email="chris@chenderson.org",
    description="Verifies the classification of differentiable Bol loops whose left translations generate a "
                "semi-simple group of dimension at most nine.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=("tests", "tests.*")),
    package_data={"bolsect._catalog": ["data/*.json", "data/algebras/*.alg", "data/groups/*.json"]},
    entry_points={"console_scripts": ["bolsect=bolsect.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=["numpy>=1.20", "scipy>=1.7", "sympy>=1.9"],
    extras_require={"test": ["hypothesis>=6.0"]},
    python_requires=">=3.7, <4",
)
