import sys

from rulehide.cli import main

sys.exit(main())
