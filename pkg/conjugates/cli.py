"""Process-level entry point: ``python -m conjugates.cli transform ...``."""

import os
import sys
from typing import List, Optional

COMMAND = "legendre"


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the ``legendre`` management command as a program would.

    Args:
        argv: Arguments after the program name (defaults to sys.argv[1:])

    Returns:
        Exit code: 0 success, 1 failed check, 2 usage or input error
    """
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "legendre.settings")
    from django.core.management import ManagementUtility

    if argv is None:
        argv = sys.argv[1:]
    utility = ManagementUtility([COMMAND, COMMAND, *argv])
    try:
        utility.execute()
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
