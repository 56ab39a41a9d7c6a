import sys

from memcost.cli import main

sys.exit(main())
