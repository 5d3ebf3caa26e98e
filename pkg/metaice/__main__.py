import sys

from metaice.cli import main

sys.exit(main())
