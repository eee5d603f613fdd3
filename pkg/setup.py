import io, re
from setuptools import setup

with io.open("README.rst", "rt", encoding="utf8") as f:
    readme = f.read()

with io.open("cqedmetro/__init__.py", "rt", encoding="utf8") as f:
    version = re.search(r"__version__ = \'(.*?)\'", f.read()).group(1)

requires = [
    'click>=7.0',
    'numpy>=1.17',
    'pandas>=0.24',
    'qutip>=4.7',
    'scipy>=1.1.0',
]

tests_require = ['pytest']

classifiers = [
    'License :: OSI Approved :: Apache Software License',
    'Programming Language :: Python :: 3.9',
    'Environment :: Console',
    'Development Status :: 3 - Alpha',
    'Topic :: Scientific/Engineering :: Physics',
    'Intended Audience :: Science/Research'
]

setup(
    name='cqedmetro',
    version=version,
    description='Simulate GHZ-state bias metrology of qubits in a cavity',
    long_description=readme,
    author='cqedmetro developers',
    license='Apache',
    platforms=['Windows', 'Linux', 'Mac OS X'],
    classifiers=classifiers,
    packages=['cqedmetro', 'cqedmetro.scripts'],
    install_requires=requires,
    tests_require=tests_require,
    package_data={'cqedmetro': ['example_data/*', 'env/*.yml']},
    include_package_data=True,
    entry_points='''
        [console_scripts]
        cqedmetro=cqedmetro.scripts.cqedmetro:cqedmetro
        simulate=cqedmetro.scripts.cqedmetro:cqedmetro
    '''
)
