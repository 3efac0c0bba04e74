"""Report renderers: rich terminal tables, JSON and CSV."""
