import sys

from mzl.cli import main

sys.exit(main())
