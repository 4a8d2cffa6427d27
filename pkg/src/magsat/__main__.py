# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Run the magsat command-line interface with ``python -m magsat``."""

from magsat.cli import main

if __name__ == "__main__":
    main()
