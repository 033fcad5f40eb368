"""Decomposability of edge polytopes of finite simple graphs."""
