import sys

from oddlab.cli import main

sys.exit(main())
