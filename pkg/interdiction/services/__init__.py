"""Graph, payoff, solver and experiment services."""
