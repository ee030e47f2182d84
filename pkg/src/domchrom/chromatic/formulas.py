"""Closed-form chi_dom values for paths, cycles, complete graphs, stars and wheels."""

from __future__ import annotations

from ..errors import DomainError


def formula_path(n: int) -> int:
    """chi_dom(P_n): n/2 when 4 divides n, else floor(n/2) + 1.  Valid for
    n >= 2 (P_2 = K_2 gives 2)."""
    if n < 2:
        raise DomainError(f"path formula needs n >= 2, got {n}")
    return n // 2 if n % 4 == 0 else n // 2 + 1


def formula_cycle(n: int) -> int:
    # n = 3 is excluded: C_3 = K_3 needs 3 colors, the expression gives 2.
    if n < 4:
        raise DomainError(f"cycle formula needs n >= 4, got {n}")
    return n // 2 if n % 4 == 0 else n // 2 + 1


def formula_complete(n: int) -> int:
    if n < 2:
        raise DomainError(f"complete formula needs n >= 2, got {n}")
    return n


def formula_star(n: int) -> int:
    """Star on ``n`` vertices (center plus n-1 leaves)."""
    if n < 2:
        raise DomainError(f"star formula needs n >= 2, got {n}")
    return 2


def formula_wheel(rim: int) -> int:
    """The hub is universal, so chi_dom(W_n) = chi(W_n) = chi(C_n) + 1."""
    if rim < 3:
        raise DomainError(f"wheel formula needs rim >= 3, got {rim}")
    return 4 if rim % 2 else 3
