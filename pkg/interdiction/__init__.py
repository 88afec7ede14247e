"""Network interdiction games for drone delivery under classical and prospect-theoretic payoffs."""

__version__ = "0.1.0"
