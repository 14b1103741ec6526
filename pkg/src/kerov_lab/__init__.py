"""Kerov rectangular Young diagrams from interlacing spectra of random matrices."""

__version__ = "0.1.0"
