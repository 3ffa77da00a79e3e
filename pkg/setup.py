from setuptools import setup, find_packages

LONG_DESCRIPTION = open('README.md', 'r').read()

REQUIREMENTS = [
    'cytoolz>=0.11.2',
    'mpmath>=1.0.0',
    'numpy>=1.17.0',
    'pytest>=7.0.0',
    'scipy>=1.4.0',
    'setuptools>=50.3.2',
    'sympy>=1.6',
    'tox>=3.13.2',
]

setup(
    name='dunkl-susy-python',
    version='0.3.0',
    packages=find_packages(exclude=['tests', 'tests.*', 'integration_tests']),
    description=(
        'Dunkl-supersymmetric orthogonal polynomials: construction, '
        'shape invariant potentials and numerical verification'
    ),
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    license='Apache 2.0',
    install_requires=REQUIREMENTS,
    entry_points={
        'console_scripts': [
            'dunkl-susy=dunklsusy.cli:main',
        ],
    },
    keywords=(
        'orthogonal polynomials dunkl operator supersymmetry '
        'shape invariance gaussian quadrature'
    ),
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ],
)
