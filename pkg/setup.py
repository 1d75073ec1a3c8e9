"""
--- Friedberg ---
Friedberg Python package setup file.
"""
from setuptools import setup, find_packages


setup(
    name="friedberg",
    version="0.1.0",
    description="Stage-based simulator of Friedberg numbering games with refereed winning strategies",
    author="Friedberg developers",
    include_package_data=True,
    packages=find_packages(exclude=['tests']),
    package_data={'friedberg': ['cli/run_config.yaml']},
    python_requires='>=3.8',
    install_requires=['numpy',
                      'pyyaml'],
    extras_require={
        'docs': [
            'sphinx',
            'sphinxcontrib-napoleon',
            'sphinx_rtd_theme',
            'numpydoc',
        ],
        'tests': [
            'pytest',
            'pytest-cov',
            'pytest-pep8',
            'tox',
        ],
    },
    tests_require=[
        'pytest',
        'pytest-cov',
        'pytest-pep8',
        'tox',
    ],
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
    ],
    entry_points={
        'console_scripts': [
            'friedberg=friedberg.cli.friedberg_run:main',
        ]
    }
)
