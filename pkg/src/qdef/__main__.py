import sys

from qdef.cli import main

sys.exit(main())
