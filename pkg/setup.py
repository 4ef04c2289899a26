from setuptools import setup, find_packages

setup(
    name='giantatom',
    version='1.0',
    packages=find_packages(include=['giantatom', 'giantatom.*']),
    python_requires='>=3.9',
    install_requires=[
        'numpy',
        'scipy>=1.7',
        'pandas>=1.5',
        'omegaconf',
        'joblib',
        'tqdm',
        'simplejson',
    ],
    entry_points={
        'console_scripts': [
            'giant-atom=giantatom.scripts.run_giant_atom:main',
        ],
    },
)
