"""Module entry point: python -m heavenly."""

from .cli import main

raise SystemExit(main())
