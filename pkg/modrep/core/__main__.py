import sys

from modrep.core.cli import main

sys.exit(main())
