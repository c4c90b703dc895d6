"""
Formal Vanishing Toolkit Package
"""

__version__ = "0.1.0"
__title__ = "Formal Vanishing Toolkit"
__description__ = "Invariants and graded Cech evidence for vanishing of formal local cohomology"
