"""Command line interface."""
from tuttekit.cli.main import main
from tuttekit.cli.parsing import parse_input, parse_text
