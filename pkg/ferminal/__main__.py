import sys

from ferminal.cli import main

sys.exit(main())
