import sys

from hessberg.cli import main

sys.exit(main())
