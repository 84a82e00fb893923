"""Finite lattices: congruences, interval doubling, core label orders, enumeration."""

from ._culat import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
