"""Tests for the drone-delivery interdiction game toolkit."""
