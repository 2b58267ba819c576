import sys

from hooklens.cli import main

sys.exit(main())
