"""Command-line subcommands"""
from . import census, extremes, gen, rank_levels, synth, verify

COMMANDS = [gen, extremes, synth, verify, census, rank_levels]

__all__ = ["COMMANDS", "census", "extremes", "gen", "rank_levels", "synth", "verify"]
