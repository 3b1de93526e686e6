import sys

from equivariant_sw.cli import main

sys.exit(main())
