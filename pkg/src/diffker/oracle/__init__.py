"""Brute-force verifiers for the combinatorial claims the bounds rest on."""
