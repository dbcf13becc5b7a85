"""Synthetic action-pose video benchmark toolkit.

Generates labeled pose clips with a deterministic software renderer,
extracts classical vision features, trains classical classifiers and
runs the evaluation harness that ties them together.
"""

__version__ = "0.1.0"
