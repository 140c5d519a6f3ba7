"""compmat: exact column competence and LCP toolkit."""

from .main import main

__all__ = ['main']
