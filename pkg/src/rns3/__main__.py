import sys

from rns3.cli import main

sys.exit(main())
