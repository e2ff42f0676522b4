#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Services for ZicGdof
"""

from src.services.monte_carlo_service import MonteCarloService
from src.services.verification_service import VerificationService

__all__ = [
    'MonteCarloService',
    'VerificationService'
]
