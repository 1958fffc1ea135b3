import sys

from aronhold.cli import main

sys.exit(main())
