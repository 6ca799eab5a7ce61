import sys

from palcount.cli import main

sys.exit(main())
