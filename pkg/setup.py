from setuptools import find_packages, setup

# Find all packages including src as the root namespace
all_packages = ['src'] + [f'src.{pkg}' for pkg in find_packages(where="src")]

setup(
    name="grs-obstruct",
    version="0.1.0",
    description="Exact Heegaard Floer d-invariant obstructions to finite concordance order of knots",
    author="Your Name",
    packages=all_packages,
    package_dir={"src": "src"},
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.21.0",
        "click>=8.0.0",
        "sympy>=1.9",
    ],
    extras_require={
        "test": [
            "pytest>=7.0.0",
            "hypothesis>=6.0.0",
        ],
    },
    entry_points={
        'console_scripts': [
            'grs-obstruct=src.cli.obstruction_cli:main',
        ],
    },
)
