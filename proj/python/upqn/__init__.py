"""Unitarity of highest weight modules over u(p,q|n).

Weights are strings "l1,...,lm;w1,...,wn" with integer or a/b entries; signatures
are "p,q,n" strings or (p, q, n) tuples.
"""

from ._upqn import (
    NotDominant,
    UnsupportedSignature,
    certify,
    check_u,
    gamma_bound_sufficient,
    integral_classify,
    is_dominant,
    joint_hwv,
    lambda_flat,
    run_cli,
)

__all__ = [
    "NotDominant",
    "UnsupportedSignature",
    "certify",
    "check_u",
    "gamma_bound_sufficient",
    "integral_classify",
    "is_dominant",
    "joint_hwv",
    "lambda_flat",
    "run_cli",
]
