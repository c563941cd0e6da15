import sys

from quadnomial.cli import main

sys.exit(main())
