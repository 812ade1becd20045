"""Allow running the CLI with `python -m multibrot`."""

from .main import run

if __name__ == "__main__":
    run()
