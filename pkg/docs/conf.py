# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Sphinx configuration."""

from random_circle_maps import __version__

# -- General configuration ------------------------------------------------

# Do not warn on external images.
suppress_warnings = ["image.nonlocal_uri"]

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

project = "random-circle-maps"
copyright = "2026, Random-Circle-Maps contributors"
author = "Random-Circle-Maps contributors"

# The full version, including alpha/beta/rc tags.
release = __version__

language = "en"

exclude_patterns = []

pygments_style = "sphinx"

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"

html_theme_options = {
    "description": "Random expanding circle maps and orbits with historic behaviour.",
    "show_powered_by": False,
}

html_sidebars = {
    "**": [
        "about.html",
        "navigation.html",
        "relations.html",
        "searchbox.html",
        "donate.html",
    ]
}

htmlhelp_basename = "random-circle-maps_namedoc"

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (
        master_doc,
        "random-circle-maps.tex",
        "random-circle-maps Documentation",
        "Random-Circle-Maps contributors",
        "manual",
    ),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, "random-circle-maps", "random-circle-maps Documentation", [author], 1)
]

# Example configuration for intersphinx: refer to the Python standard library.
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "flask": ("https://flask.palletsprojects.com/en/latest/", None),
    "marshmallow": ("https://marshmallow.readthedocs.io/en/stable/", None),
}

# Autodoc configuraton.
autoclass_content = "both"
