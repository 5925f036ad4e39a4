# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------

project = "MinorCast"
copyright = "2026, MinorCast developers"
author = "MinorCast developers"

# -- General configuration ---------------------------------------------------

extensions = [
	"sphinx.ext.autodoc",
	"sphinx.ext.mathjax",
	"sphinx.ext.viewcode",
	"myst_parser",
	"sphinx_copybutton",
]
source_suffix = {
	".rst": "restructuredtext",
	".md": "markdown",
}

templates_path = ["_templates"]
exclude_patterns = []

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
