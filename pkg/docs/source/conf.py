# Конфигурация сборки документации Sphinx для codforge.
import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

from codforge import __version__  # noqa: E402

# -- Проект ------------------------------------------------------------------

project = 'codforge'
copyright = '2026, codforge team'
author = 'codforge team'
release = __version__

# -- Общие настройки ---------------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx_autodoc_typehints',
]

templates_path = ['_templates']
exclude_patterns = []

language = 'ru'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'pandas': ('https://pandas.pydata.org/docs', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}

# -- Autodoc -----------------------------------------------------------------
autodoc_default_options = {
    'members': True,
    'member-order': 'bysource',
    'undoc-members': True,
    'exclude-members': '__weakref__',
    'show-inheritance': True,
}

autosummary_generate = True
autodoc_typehints = 'signature'
napoleon_google_docstring = True
napoleon_numpy_docstring = False

# -- HTML --------------------------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
