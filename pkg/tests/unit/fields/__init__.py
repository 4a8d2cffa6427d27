# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Unit tests for the field scales, constants and permittivities."""
