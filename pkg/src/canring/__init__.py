"""canring - section rings of Q-divisors on projective spaces and Hirzebruch surfaces."""

__version__ = "0.1.0"
