"""Entry point for python -m idealforge"""

import sys

from idealforge.cli import main

if __name__ == "__main__":
    sys.exit(main())
