"""
steinhc setup file
"""

import os
from setuptools import setup, find_packages

# To use a consistent encoding
from codecs import open

here = os.path.abspath(os.path.dirname(__file__))

# Get the long description from the README file
with open(os.path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='steinhc',

    # Versions should comply with PEP440. Here we use a version generated
    # automatically from git.
    use_scm_version=True,
    setup_requires=['setuptools_scm'],

    description='Contact homology of subcritical Stein domains',
    long_description=long_description,

    # Choose your license
    license='BSD',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
    ],

    keywords='symplectic topology contact homology Stein Reeb',

    packages=find_packages(exclude=['contrib', 'docs']),

    python_requires='>=3.9',

    # numba jit-compiles the Reeb integrator; sympy holds the exact
    # matrices; astropy renders tables
    install_requires=['numpy','astropy','numba','sympy','jsonschema'],

    extras_require={
        'dev': ['check-manifest'],
        'test': ['pytest','coverage'],
    },

    # the JSON schemas of the input files
    package_data={
        'steinhc': ['schemas/*.json'],
    },

    entry_points={
        'console_scripts' : [
            'steinhc=steinhc.scripts.run:main',
        ],
    },

)
