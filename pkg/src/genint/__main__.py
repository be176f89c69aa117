import sys

from genint.cli import main

sys.exit(main())
