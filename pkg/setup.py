from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="hessberg",
    version="0.1.0",
    description="Betti numbers, connectedness and fixed-point chains of Hessenberg varieties from root data",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["hessberg", "hessberg.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy",
        "networkx>=3.0",
        "Jinja2>=3.0",
        "sympy>=1.10",
    ],
    extras_require={
        "dev": ["pytest>=6.0", "black>=21.0", "isort>=5.0", "flake8>=3.9"],
    },
    entry_points={
        "console_scripts": [
            "hessberg=hessberg.cli:main",
        ],
    },
)
