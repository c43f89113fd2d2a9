#!/usr/bin/env python

from setuptools import setup, find_packages


setup(
name='abelcay',
version='0.1',
description='Distance metrics and extremal orders of Cayley digraphs of finite Abelian groups',
url='',
python_requires='>=3.9',
packages=find_packages(exclude=['examples', 'examples.*']),
install_requires=['numpy', 'scipy', 'sympy', 'h5py'],
extras_require={'test': ['pytest', 'hypothesis']},
entry_points={'console_scripts': ['abelcay=abelcay.report.cli:main']},
)
