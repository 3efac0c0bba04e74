"""Allow running qnl as `python -m qnl`."""

from qnl.cli import app

app()
