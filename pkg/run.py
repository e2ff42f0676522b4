#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script to run ZicGdof from a source checkout
Sets up PYTHONPATH and forwards the command line to src/main.py.
"""

import logging
import os
import subprocess
import sys

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(levelname)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S"
)
logger = logging.getLogger("ZicGdof.Run")


def run_application(argv=None):
    """Run src/main.py as a child process and return its exit code"""
    current_dir = os.path.dirname(os.path.abspath(__file__))
    main_script = os.path.join(current_dir, "src", "main.py")
    if not os.path.exists(main_script):
        logger.error(f"main.py not found at: {main_script}")
        return 1

    env = os.environ.copy()
    if "PYTHONPATH" in env:
        env["PYTHONPATH"] = f"{current_dir}{os.pathsep}{env['PYTHONPATH']}"
    else:
        env["PYTHONPATH"] = current_dir
    logger.debug(f"PYTHONPATH: {env['PYTHONPATH']}")

    try:
        process = subprocess.run(
            [sys.executable, main_script, *(sys.argv[1:] if argv is None else argv)],
            env=env,
            cwd=current_dir
        )
    except OSError as e:
        logger.error(f"Could not start zicgdof: {str(e)}")
        return 1
    if process.returncode not in (0, 2):
        logger.error(f"zicgdof exited with code {process.returncode}")
    return process.returncode


if __name__ == "__main__":
    sys.exit(run_application())
