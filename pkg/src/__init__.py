"""
Diagnósticos del error de la aproximación de Laplace
Término principal L, coeficientes c̃₃, c₃, c₄ y oráculos de validación
"""

__version__ = "1.0.0"
__author__ = "Equipo de Desarrollo"
