from setuptools import setup, find_packages

setup(
    name="sturmian-python",
    description="Exact abelian powers, repetitions and Lagrange constants of Sturmian words",
    author="sturmian-python developers",
    packages=find_packages(include=["sturmian", "sturmian.*"]),
    install_requires=[
        "numpy>=1.20",
        "mpmath>=1.3.0",
        "sympy>=1.10"
    ],
    python_requires=">=3.8",
    entry_points={
        'console_scripts': [
            'sturmian=sturmian.cli:main',
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    use_scm_version={
        "write_to": "sturmian/_version.py",
        "version_scheme": "post-release",
    },
    setup_requires=['setuptools_scm'],
)
