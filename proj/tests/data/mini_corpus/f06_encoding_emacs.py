# -*- coding: utf-8 -*-
"""Locale aware formatting helpers used by the report writer."""
