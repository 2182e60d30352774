"""Run the command-line interface via ``python -m polariscope``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
