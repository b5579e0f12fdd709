"""
Builder classes for vpflab
"""

from vpflab.builders.sweep_config_builder import SweepConfigBuilder

__all__ = ["SweepConfigBuilder"]
