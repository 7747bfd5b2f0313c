"""Family tags for the graded chains and their cohomology tables."""

from enum import Enum


class Family(Enum):
    KL_Z = "kl"
    KL_TILDE_T = "kl-tilde"
    AIRY_Z = "airy"
    V21 = "v21"

    @classmethod
    def from_tag(cls, tag: str) -> "Family":
        for fam in cls:
            if fam.value == tag:
                return fam
        raise ValueError(f"unknown family tag {tag!r}")
