import sys

from .exper.cli import main

sys.exit(main())
