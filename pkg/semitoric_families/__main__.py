import sys

from semitoric_families.cli import main

if __name__ == "__main__":
    sys.exit(main())
