#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Version information for ZicGdof
"""


def get_version_string():
    """Get the version string"""
    return "0.1.0"


def get_version_info():
    """Get detailed version information"""
    return {
        "version": "0.1.0",
        "date": "2026-10-18",
        "description": "Exact GDoF regions, achievability checks, rank oracle and Monte Carlo validation",
    }


if __name__ == "__main__":
    print(f"ZicGdof {get_version_string()}")
    print(f"Released {get_version_info()['date']}")
    print(get_version_info()['description'])
