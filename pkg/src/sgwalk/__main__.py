"""Module entry point: ``python -m sgwalk`` behaves like the ``sgwalk`` script."""

from .cli import entry

if __name__ == "__main__":
    entry()
