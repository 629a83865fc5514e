"""Setup script for the crossnum package"""

from setuptools import setup, find_packages
from pathlib import Path

# Read README
readme_file = Path(__file__).parent / "README.md"
long_description = readme_file.read_text(encoding="utf-8") if readme_file.exists() else ""

# Runtime requirements stop at the testing section
requirements_file = Path(__file__).parent / "requirements.txt"
requirements = []
if requirements_file.exists():
    for line in requirements_file.read_text(encoding="utf-8").splitlines():
        if "Testing" in line:
            break
        if line.strip() and not line.startswith("#"):
            requirements.append(line.strip())

setup(
    name="crossnum",
    version="1.0.0",
    description="Exact crossing numbers, flat-grid reduction, drawing audits and MSO evaluation for small k",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="crossnum developers",
    python_requires=">=3.9",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=requirements,
    extras_require={
        "dev": ["pytest", "pytest-cov", "black", "flake8", "mypy"],
    },
    entry_points={
        "console_scripts": [
            "crossnum=crossnum.main:main",
            "cross=crossnum.main:cross_main",
            "grid=crossnum.main:grid_main",
            "mso=crossnum.main:mso_main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
