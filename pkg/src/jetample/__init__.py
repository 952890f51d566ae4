"""Exact certificates for jets of adjoint divisors on surfaces."""
