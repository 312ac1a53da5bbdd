from setuptools import setup, find_packages

setup(
    name="distalg",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "numpy>=1.22.0",
        "scipy>=1.9.0",
        "sympy>=1.11",
        "lark>=1.1.0",
        "pyyaml>=6.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.0",
            "hypothesis>=6.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "distalg=distalg.cli:run",
        ],
    },
    author="distalg developers",
    description="Star product algebra of piecewise smooth distributions and confined Hamiltonians",
    python_requires=">=3.9",
)
