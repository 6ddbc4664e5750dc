import sys

from gysin.cli import main

sys.exit(main())
