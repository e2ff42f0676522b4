#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Configuration Manager for ZicGdof
Handles loading, saving, and accessing configuration settings
"""

import copy
import json
import logging
import os
import shutil
import threading
from pathlib import Path

from dotenv import load_dotenv

logger = logging.getLogger("ZicGdof.ConfigManager")

CONFIG_ENV_VAR = "ZICGDOF_CONFIG"
OUTPUT_DIR_ENV_VAR = "ZICGDOF_OUTPUT_DIR"


class ConfigManager:
    """Manages sweep, Monte Carlo and plot settings"""

    DEFAULT_CONFIG = {
        "general": {
            "output_dir": "",
            "log_level": "INFO",
            "log_file": ""
        },
        "sweep": {
            "max_antennas": 6,
            "alpha_grid": "0:3:1/10",
            "workers": 1
        },
        "oracle": {
            "max_antennas": 6,
            "max_m2": 8,
            "alpha_grid": "0:3:1/8"
        },
        "monte_carlo": {
            "ladder": [16, 20, 24, 28, 32, 36, 40],
            "fit_points": 4,
            "samples_per_point": 200,
            "seed": 0,
            "method": "qr",
            "workers": 1
        },
        "plot": {
            "width": 480,
            "height": 480,
            "margin": 56
        }
    }

    def __init__(self, config_path=None, load_env=True):
        """Initialize the config manager

        Args:
            config_path (str): Path to the config file; falls back to $ZICGDOF_CONFIG
                and then to the per-user default location
            load_env (bool): Read a .env file into the environment first
        """
        if load_env:
            load_dotenv()
        self.config = {}
        self.save_lock = threading.Lock()

        if config_path:
            self.config_path = str(config_path)
        elif os.environ.get(CONFIG_ENV_VAR):
            self.config_path = os.environ[CONFIG_ENV_VAR]
        else:
            self.config_path = self._get_default_config_path()

        self.load_config()

    def _get_config_dir(self):
        """Get the configuration directory"""
        if os.name == "nt":
            return os.path.join(os.environ.get("APPDATA", str(Path.home())), "ZicGdof")
        return os.path.join(str(Path.home()), ".zicgdof")

    def _get_default_config_path(self):
        """Get the default configuration file path"""
        return os.path.join(self._get_config_dir(), "config.json")

    def _read(self, path):
        with open(path, "r", encoding="utf-8") as f:
            config = json.load(f)
        if not isinstance(config, dict):
            raise ValueError(f"Top level of {path} must be an object")
        return config

    def load_config(self):
        """Load configuration from file, using defaults for anything missing

        Returns:
            bool: True if a file was read
        """
        if not os.path.exists(self.config_path):
            self.config = copy.deepcopy(self.DEFAULT_CONFIG)
            return False
        try:
            config = self._read(self.config_path)
            logger.info(f"Configuration loaded from {self.config_path}")
        except Exception as e:
            logger.error(f"Error loading configuration: {str(e)}")
            backup_file = f"{self.config_path}.bak"
            if not os.path.exists(backup_file):
                self.config = copy.deepcopy(self.DEFAULT_CONFIG)
                return False
            try:
                logger.info(f"Attempting to recover from backup: {backup_file}")
                config = self._read(backup_file)
                logger.info("Successfully recovered configuration from backup")
            except Exception as backup_error:
                logger.error(f"Error recovering from backup: {str(backup_error)}")
                self.config = copy.deepcopy(self.DEFAULT_CONFIG)
                return False
        self.config = self._update_with_defaults(config)
        return True

    def _update_with_defaults(self, config):
        """Fill in missing default values, recursively"""
        def update_dict(target, source):
            for key, value in source.items():
                if key not in target:
                    target[key] = copy.deepcopy(value)
                elif isinstance(value, dict) and isinstance(target[key], dict):
                    update_dict(target[key], value)

        update_dict(config, self.DEFAULT_CONFIG)
        return config

    def save_config(self):
        """Save the configuration atomically (temp file, then rename)

        Returns:
            bool: True if saved
        """
        with self.save_lock:
            try:
                os.makedirs(os.path.dirname(os.path.abspath(self.config_path)), exist_ok=True)
                temp_path = f"{self.config_path}.tmp"
                with open(temp_path, "w", encoding="utf-8") as f:
                    json.dump(self.config, f, indent=4, ensure_ascii=False)
                os.replace(temp_path, self.config_path)
                logger.info("Configuration saved successfully")
                return True
            except Exception as e:
                logger.error(f"Error saving configuration: {str(e)}")
                return False

    def get_config(self):
        """Get the entire configuration"""
        return self.config

    def get_value(self, section, key, default=None):
        """Get a value from the configuration"""
        if section in self.config and key in self.config[section]:
            return self.config[section][key]
        return default

    def set_value(self, section, key, value):
        """Set a value in the configuration"""
        if section not in self.config:
            self.config[section] = {}
        self.config[section][key] = value

    def set_and_save_value(self, section, key, value):
        """Set a value and save the configuration"""
        self.set_value(section, key, value)
        return self.save_config()

    def backup_config(self):
        """Create a backup of the configuration file"""
        try:
            if os.path.exists(self.config_path):
                backup_file = f"{self.config_path}.bak"
                shutil.copy2(self.config_path, backup_file)
                logger.info(f"Configuration backup created: {backup_file}")
                return True
            logger.warning("No configuration file to backup")
            return False
        except Exception as e:
            logger.error(f"Error creating configuration backup: {str(e)}")
            return False

    def get_output_dir(self):
        """Directory for relative output paths: $ZICGDOF_OUTPUT_DIR, then general.output_dir

        Returns:
            str or None
        """
        output_dir = os.environ.get(OUTPUT_DIR_ENV_VAR) or self.get_value("general", "output_dir", "")
        return output_dir or None

    def resolve_output_path(self, path):
        """Place a relative output path under the default output directory, if one is set"""
        if path is None or os.path.isabs(path):
            return path
        output_dir = self.get_output_dir()
        if not output_dir:
            return path
        os.makedirs(output_dir, exist_ok=True)
        return os.path.join(output_dir, path)
