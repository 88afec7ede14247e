"""Tests for pydantic schemas."""
