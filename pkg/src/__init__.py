#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
ZicGdof - GDoF toolkit for the MIMO Z interference channel with delayed CSIT
"""

__version__ = '0.1.0'
__author__ = 'ZicGdof Team'
