# Configuration file for the Sphinx documentation builder of steinhc.

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.imgmath']

numfig = True

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'steinhc'
copyright = '2026, the steinhc developers'
author = 'the steinhc developers'

# The full version, including alpha/beta/rc tags, from the installed package
from importlib.metadata import version as _version
release = _version('steinhc')
version = '.'.join(release.split('.')[:2])

language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

html_theme = 'alabaster'

autodoc_member_order = 'bysource'
