# mplab.py

import sys
from pathlib import Path

# Add src to path
sys.path.append(str(Path(__file__).parent / 'src'))

from cli.commands import run

if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
