"""Figures for the sampler experiment suite.

Reads the CSV artifacts a suite run leaves behind and renders them; no
dependency on the sampler package itself.
"""

__version__ = "0.1.0"

from .render import KINDS, render, render_all

__all__ = ["KINDS", "render", "render_all"]
