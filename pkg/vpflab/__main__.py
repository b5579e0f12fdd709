"""
Entry point for ``python -m vpflab``
"""

from vpflab.cli import main

raise SystemExit(main())
