import setuptools
import os

def get_requirements(path):
    ret = []
    with open(os.path.join(path, "requirements.txt"), encoding="utf-8") as freq:
        for line in freq.readlines():
            line = line.strip()
            if line and not line.startswith("#"):
                ret.append(line)
    return ret


path = os.path.dirname(os.path.abspath(__file__))
requires = get_requirements(path)

setuptools.setup(
    name = 'openspectral',
    version = '0.1.0',
    description = "A toolkit for checking exponential orthogonality on the cube and the ball, and for the distinct-distance argument that rules out a spectrum for the ball.",
    long_description=open("README.md", "r", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    license="Apache",
    keywords = ['spectral sets', 'Fourier analysis', 'Bessel zeros', 'distinct distances'],
    python_requires=">=3.8.0",
    install_requires=requires,
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    entry_points={
        "console_scripts": ["openspectral = openspectral.cli:main"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ]
)
