__version_info__ = (0, 1, 0)
version = __version__ = "0.1.0"

import sys


def main():
    from psolenoid import cli
    sys.exit(cli.run(sys.argv[1:]))
