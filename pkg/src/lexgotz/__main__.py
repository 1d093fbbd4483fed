import sys

from lexgotz.cli import main

sys.exit(main())
