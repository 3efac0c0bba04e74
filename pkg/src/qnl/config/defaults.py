"""Starter .qnl.toml template."""

DEFAULT_TOML = """\
# qnl configuration
version = "1.0"

[run]
seed = 0                  # every run is determined by (command, flags, seed)
format = "text"           # text | json | csv
threads = 1               # QNL_THREADS overrides

[budget]
max_weight = 12           # bounded search exhausts wt(u) <= max_weight
max_candidates = 10000000000
progress_every = 100000000
# wall_clock_seconds = 3600

[mis]
max_nodes = 50000000
# timeout_seconds = 60

[verify]
n = 6
samples = 20
"""
