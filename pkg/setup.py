# -*- coding: utf-8 -*-
import pathlib
import setuptools


def get_genrank_version():
    with open('genrank/__init__.py') as f:
        s = f.read().split('\n')[0]
        if '__version__' not in s:
            raise RuntimeError('Can not detect version from genrank/__init__.py')
        return eval(s.split(' ')[-1])


with open('README.md') as f:
    long_description = f.read()

setuptools.setup(
    name='genrank',
    version=get_genrank_version(),
    description='Generic ranks of Hadamard powers, Khatri-Rao decompositions '
                'and two-layer network capacity',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT',
    classifiers=[
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.8',
        'Operating System :: POSIX',
    ],
    keywords='generic-rank hadamard-power khatri-rao memory-capacity neural-networks',
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.17', 'scipy', 'tqdm', 'torch>=1.5.0', 'tensorboardX',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    include_package_data=True,
    exclude_package_data={'': ['.git']},
    packages=setuptools.find_packages(exclude=['tests', 'examples', 'examples.*']),
    scripts=[str(p) for p in pathlib.Path('bin').glob('*')],
    zip_safe=False)
