"""Tests for the holo-domains library."""
