"""qnl: stabilizer codes, graphs and boolean functions, computed exactly."""

__version__ = "0.1.0"
