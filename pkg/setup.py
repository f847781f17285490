"""
Setup script for barnes-g-multiprecision.
"""
from setuptools import setup

setup(
    name='barnes-g-multiprecision',
    version='0.1.0',
    packages=['barnes_g', 'barnes_g.test'],
    license='MPL 1.1',
    description='Arbitrary precision Barnes G, multiple gamma, Hurwitz zeta and Clausen functions.',
    long_description='Arbitrary precision Barnes G, multiple gamma, Hurwitz zeta and Clausen functions, '
                     'the Glaisher-Kinkelin constant and a numerical identity suite.',
    install_requires=[
        'mpmath>=1.3.0',
        'jsonpickle==3.0.2',
        'pandas~=2.0.3',
        'numpy==1.26.4',
    ],
    entry_points={
        'console_scripts': ['barnes-g=barnes_g.cli:main'],
    },
    classifiers=[
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: Implementation :: PyPy',
    ]
)
