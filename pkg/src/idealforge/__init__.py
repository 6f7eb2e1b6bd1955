"""
idealforge: exact ideal matrices, double ideal matrices and phi-quasi-cyclic codes
"""

__version__ = "0.1.0"
