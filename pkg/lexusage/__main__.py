#!/usr/bin/env python3
"""Allows running the program as a module.

``python -m lexusage <command> <arguments>``
"""

from .cli import run

run()
