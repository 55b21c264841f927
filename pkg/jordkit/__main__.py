import sys

from jordkit.cli import main

sys.exit(main())
