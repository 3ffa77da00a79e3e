import sys

from dunklsusy.cli import main

sys.exit(main())
