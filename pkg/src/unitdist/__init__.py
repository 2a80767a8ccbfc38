"""Classification toolkit for unit-distance and forbidden graphs on few vertices."""

__version__ = "0.1.0"
