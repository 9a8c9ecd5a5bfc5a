"""Exact cellular-basis engine for Brauer and Birman-Murakami-Wenzl algebras."""

__version__ = "0.1.0"
