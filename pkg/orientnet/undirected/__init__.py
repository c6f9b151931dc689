"""Undirected solvers: exact tree orientation, conflict kernel, backbone approximation."""
