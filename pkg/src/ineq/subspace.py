"""Placeholder: catalog module under construction."""
