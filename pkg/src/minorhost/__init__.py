"""minorhost - certified minor search and universal hosts for minor-closed classes."""

__version__ = "0.1.0"
