"""Exact decision procedures for integer matrix semigroups."""

from ._core import (
    NotUnimodular,
    coset_representatives,
    eval_word,
    factor_in_sanov,
    identity_bounded,
    identity_in_semigroup,
    membership_bounded,
    subgroup_membership,
)

__all__ = [
    "NotUnimodular",
    "coset_representatives",
    "eval_word",
    "factor_in_sanov",
    "identity_bounded",
    "identity_in_semigroup",
    "membership_bounded",
    "subgroup_membership",
]
