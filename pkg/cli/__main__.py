import sys

from cli.comandos import main

if __name__ == '__main__':
    sys.exit(main())
