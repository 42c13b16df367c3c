# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))


# -- Project information -----------------------------------------------------

project = "pycran - JT-CoMP clustering in a C-RAN"
copyright = "2024, Edward J. Parkinson"
author = "Edward J. Parkinson"

version = "1.0.0"
release = "1.0.0"


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "numpydoc",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = "en"
exclude_patterns = []
pygments_style = None


# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
html_static_path = ["_static"]
htmlhelp_basename = "pycrandoc"


# -- Options for manual page output ------------------------------------------

man_pages = [(master_doc, "pycran", "pycran Documentation", [author], 1)]


# -- Extension configuration -------------------------------------------------

autoclass_content = "both"
numpydoc_show_class_members = False
