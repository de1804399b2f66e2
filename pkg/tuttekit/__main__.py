import sys

from tuttekit.cli import main

sys.exit(main())
