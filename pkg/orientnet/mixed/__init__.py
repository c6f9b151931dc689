"""Exact solvers for mixed graphs: paths, cycles, trees and arc-joined forests."""
