"""
Módulo de Solvers - Algoritmos numéricos de los diagnósticos de Laplace.
"""

from .base_solver import BaseSolver

__all__ = ["BaseSolver"]
