"""fcq: exact algebra for power operations and Frobenius-constant quantizations."""

__version__ = "0.1.0"
