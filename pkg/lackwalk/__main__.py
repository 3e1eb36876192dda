import sys

from lackwalk.cli import main

sys.exit(main())
