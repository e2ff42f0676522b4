# -*- coding: utf-8 -*-
"""
Utilities for ZicGdof: exact serialization and SVG plots
"""
