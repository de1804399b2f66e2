import setuptools

# Fix Linux permissions clash
import sys
import site
site.ENABLE_USER_SITE = "--user" in sys.argv[1:]

with open("requirements.txt", 'r') as fh:
    requirements = [line.strip() for line in fh.readlines() if line.strip()]

setuptools.setup(
    name="tuttekit",
    version="0.1.0",
    description="Exact matroid and Tutte polynomial toolkit.",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Development Status :: 3 - Alpha",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries"
    ],
    packages=setuptools.find_packages(include=['tuttekit', 'tuttekit.*']),
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={
        'console_scripts': ['tuttekit = tuttekit.cli:main']
    }
)
