#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Core Components for ZicGdof
"""

from src.core.config_manager import ConfigManager
from src.core.types import AntennaConfig, Alpha, FTermSpec, GdofPoint
from src.core.region import HalfPlane, Region2D

__all__ = ['ConfigManager', 'AntennaConfig', 'Alpha', 'FTermSpec', 'GdofPoint', 'HalfPlane', 'Region2D']
