"""Rule implementations; importing this package registers every rule."""

from . import data_cleaning, evaluation, training  # noqa: F401
