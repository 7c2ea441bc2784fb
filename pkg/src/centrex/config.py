"""Defaults shared by the randomised checks and the CLI."""

# Fixed seed so that randomised runs are reproducible byte for byte.
DEFAULT_SEED = 2021

DEFAULT_TRIALS = 500
DEFAULT_DIM_BOUND = 4
