"""Exact tools for clock synchronization lower bounds on k-ary m-toroids.

Based on:
 + NumPy (http://numpy.org)
 + SciPy (http://scipy.org), for the approximate LP cross-check

Contains:
 + toroid - k-ary m-toroid topologies, process ids and directed edges
 + delays - delay assignments, shift matrices and admissibility
 + certificate - the odd-toroid certificate, its checker and the W table
 + bounds - closed-form bounds for toroids, meshes and cliques
 + simplex, lp_search - exact LP search for the best certificate
 + simulator, algorithms, witness - discrete-event runs and skew witnesses
 + cli - the pyshift command
"""

classifiers = """\
Development Status :: 4 - Beta
Environment :: Console
Intended Audience :: Science/Research
Intended Audience :: Developers
License :: OSI Approved :: BSD License
Operating System :: OS Independent
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
Topic :: System :: Distributed Computing
"""

doclines = __doc__.split("\n")

package_data = {'pyshift': ['tests/data/*.csv']}

if __name__ == '__main__':
    from setuptools import setup
    setup(name = "pyshift",
          version = '0.1.0',
          description = doclines[0],
          long_description = "\n".join(doclines[2:]),
          author = "pyshift developers",
          packages = ['pyshift', 'pyshift.tests'],
          license = 'BSD',
          platforms = ["any"],
          python_requires = '>=3.7',
          install_requires = ['numpy', 'scipy'],
          extras_require = {'test': ['pytest', 'hypothesis']},
          entry_points = {'console_scripts': ['pyshift = pyshift.cli:main']},
          classifiers = [c for c in classifiers.split("\n") if c],
          package_data = package_data,
          )
