"""Frequency-dependent relaxation and Lamb shifts of giant atoms coupled to a 1D field."""

__version__ = "1.0"
