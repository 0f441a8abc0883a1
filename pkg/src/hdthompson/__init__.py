"""Numbered dyadic patterns, the monoid Pi, and the groups 2V-hat and 2V."""

from .kernel import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
