# -*- coding: utf-8 -*-
#
# isokam documentation build configuration file.

import isokam

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
    "numpydoc",
    "sphinx.ext.autosummary",
]
numpydoc_show_class_members = False
templates_path = ["_templates"]
source_suffix = [".rst"]
pygments_style = "sphinx"
master_doc = "index"

project = u"isokam"
copyright = u"2026, the isokam developers"

# The short X.Y version and the full version.
version = isokam.__version__
release = isokam.__version__

exclude_patterns = ["_build"]
html_theme = "alabaster"
htmlhelp_basename = "isokamdoc"

latex_documents = [
    ("index", "isokam.tex", u"isokam Documentation", u"isokam developers", "manual"),
]
man_pages = [("index", "isokam", u"isokam Documentation", [u"isokam developers"], 1)]
