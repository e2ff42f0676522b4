#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Resources module for ZicGdof
Handles access to the JSON schema documents of the output formats
"""

import json
import os

RESOURCES_DIR = os.path.dirname(os.path.abspath(__file__))
SCHEMAS_DIR = os.path.join(RESOURCES_DIR, "schemas")

SCHEMAS = ("region", "verification_record", "oracle_summary", "validation")


def get_resource_path(resource_type, filename):
    """
    Get the absolute path to a resource file

    Args:
        resource_type (str): Type of resource ("schemas" or anything else for the root)
        filename (str): Name of the resource file

    Returns:
        str: Absolute path to the resource file
    """
    if resource_type == "schemas":
        return os.path.join(SCHEMAS_DIR, filename)
    return os.path.join(RESOURCES_DIR, filename)


def load_schema(name):
    """Load the JSON schema of an output format by name, e.g. "region" """
    if name not in SCHEMAS:
        raise ValueError(f"Unknown schema {name!r}, expected one of {', '.join(SCHEMAS)}")
    with open(get_resource_path("schemas", f"{name}.schema.json"), "r", encoding="utf-8") as f:
        return json.load(f)
