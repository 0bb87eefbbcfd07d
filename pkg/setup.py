from setuptools import setup, find_packages

setup(
    name="fusionring",
    version="1.0.0",
    packages=find_packages(exclude=("examples", "examples.*")),
    python_requires=">=3.10",
    install_requires=[
        "python-dotenv>=1.0.0",
        "numpy>=1.26.2",
        "pandas>=2.1.3",
        "pydantic>=2.5.2",
        "loguru>=0.7.2",
        "tabulate>=0.9.0",
        "sympy>=1.12",
    ],
    entry_points={
        "console_scripts": [
            "fusionring=cli.main:main",
        ],
    },
)
