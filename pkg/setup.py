from setuptools import setup, find_packages
import os

# The package sources live in src/packages/polite-seating; this root manifest
# mirrors src/packages/polite-seating/setup.py so the project installs from here.
PKG_DIR = os.path.join('src', 'packages', 'polite-seating')

# Read version from version.py
version_file = os.path.join(os.path.dirname(os.path.abspath(__file__)), PKG_DIR, 'version.py')
with open(version_file) as f:
    exec(f.read())

setup(
    name='polite-seating',
    version=__version__,
    description='Exact counts for the polite seating (urinal) problem with a brute-force oracle',
    author='Your Team',
    package_dir={'': PKG_DIR},
    packages=find_packages(where=PKG_DIR),
    py_modules=['version'],
    package_data={'polite_seating': ['defaults.yaml']},
    install_requires=[
        'pyyaml>=6.0',
        'pandas>=2.0.0',
        'joblib>=1.3.0',
    ],
    entry_points={
        'console_scripts': [
            'polite-seating=polite_seating.cli:main',
        ],
    },
    python_requires='>=3.9',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
