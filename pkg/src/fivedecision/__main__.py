"""Allows `python -m fivedecision`."""

import sys

from .cli import main

sys.exit(main())
