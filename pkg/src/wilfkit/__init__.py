"""Pattern avoidance in set partitions and dominating equivalence of compositions."""

__version__ = "0.1.0"
