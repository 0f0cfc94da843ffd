"""
Run the matalg command line from a source checkout.
"""

import asyncio
import sys
from pathlib import Path

# Add project root to Python path
sys.path.append(str(Path(__file__).parent.parent))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(asyncio.run(main()))
