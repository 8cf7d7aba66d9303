#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# ldirc documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

sys.path[0:0] = [os.path.abspath('../src')]

import ldirc

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
]

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

# The suffix of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = 'ldirc'
copyright = '2026, ldirc developers'

# The short X.Y version.
version = ldirc.__version__
# The full version, including alpha/beta/rc tags.
release = ldirc.__version__

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ['_build', 'curves']

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'furo'

# Output file base name for HTML help builder.
htmlhelp_basename = 'ldircdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'ldirc', 'ldirc Documentation',
     ['ldirc developers'], 1)
]
