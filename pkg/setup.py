from setuptools import setup, find_packages

long_description = '''
TSW (Team Semantics Workbench) evaluates team-semantic logics on finite structures,
translates them into (existential) second-order sentences and checks team maps,
ultraproducts and direct limits against their model-theoretic laws.

TSW is compatible with Python 3.7+ and is distributed under the Apache 2.0 license.
'''

setup(
    name='TSW',
    version='0.1.0',
    description='Team Semantics Workbench',
    long_description=long_description,
    license='Apache 2.0',
    install_requires=['lark>=1.1', 'networkx>=2.3', 'numpy>=1.16.2', 'PyYAML>=5.1', 'tqdm'],
    extras_require={
        'tests': ['pytest>=4.3.0', 'pytest-cov>=2.6.1', 'hypothesis>=4.0'],
        'docs': ['mkdocs==1.0.4', 'mkdocs-material==4.0.2'],
        'dev': ['bumpversion==0.5.3'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ],
    packages=find_packages(exclude=('tests',)),
    entry_points={'console_scripts': ['tsw=TSW.assistant:main']},
)
