"""Entry point for the canring command."""

import sys

from canring.cli import run


def main() -> None:
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
