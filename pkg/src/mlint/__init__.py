"""mlint: static analysis for ML-specific code smells in Python source."""

__version__ = "0.1.0"

TOOL_NAME = "mlint"
