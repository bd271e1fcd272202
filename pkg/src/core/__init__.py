"""
Módulo core - Dominio, solvers numéricos y servicios de los diagnósticos de Laplace.
"""
