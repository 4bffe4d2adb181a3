from setuptools import setup, find_packages
import os

# Read version from version.py
version_file = os.path.join(os.path.dirname(__file__), 'version.py')
with open(version_file) as f:
    exec(f.read())

setup(
    name='polite-seating',
    version=__version__,
    description='Exact counts for the polite seating (urinal) problem with a brute-force oracle',
    author='Your Team',
    packages=find_packages(),
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
