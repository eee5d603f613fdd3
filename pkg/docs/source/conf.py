# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('../../'))

# for ReadTheDocs to prevent C-based module import issues
autodoc_mock_imports = ['numpy', 'pandas', 'qutip', 'scipy']

# -- Project information -----------------------------------------------------

project = 'cqedmetro'
copyright = '2026, cqedmetro developers'
author = 'cqedmetro developers'

# The short X.Y version
version = ''
# The full version, including alpha/beta/rc tags
release = ''
try:
    from cqedmetro import __version__ as version
except ImportError:
    pass
else:
    release = version

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx_click.ext',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
pygments_style = None

# references to functions- hide parentheses inline
add_function_parentheses = False
autodoc_member_order = 'bysource'

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'display_version': True,
    'prev_next_buttons_location': 'bottom',
    'collapse_navigation': False,
    'sticky_navigation': True,
    'navigation_depth': 4,
}
htmlhelp_basename = 'cqedmetrodoc'

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'cqedmetro.tex', 'cqedmetro Documentation',
     'cqedmetro developers', 'manual'),
]

# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'cqedmetro', 'cqedmetro Documentation',
     [author], 1)
]

# -- Options for intersphinx extension ---------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'pandas': ('https://pandas.pydata.org/pandas-docs/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/reference', None),
}
