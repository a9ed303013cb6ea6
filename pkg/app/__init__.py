# Chromatic Harness
__version__ = "1.0.0"
