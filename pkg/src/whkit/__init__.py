"""Exact toolkit for finite weak Hopf algebras, their integrals and duals."""
