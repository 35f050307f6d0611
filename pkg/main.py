import sys

from harness.Commands import main

if __name__ == '__main__':
    sys.exit(main())
