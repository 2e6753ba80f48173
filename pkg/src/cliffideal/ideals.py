"""Primitive idempotents and minimal left ideals of R_{p,q}.

An idempotent is built from k commuting basis blades that square to +1
and whose index sets are independent over F_2, as the expanded product
prod (1 + s_i e_{t_i}) / 2.  With k = q - r_{q-p} (r the Radon-Hurwitz
numbers) the result is primitive and its left ideal has dimension
2^{p+q-k}; ideal dimensions are computed by exact rational elimination,
never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _iterproduct
from typing import Iterable, Sequence

from .algebra import (
    Multivector,
    Signature,
    blade_mask,
    blade_product_masks,
    blade_square_sign,
    mask_indices,
)
from .linalg import RowBasis

_RH_BASE = (0, 1, 2, 2, 3, 3, 3, 3)


class GeneratorError(ValueError):
    """The proposed generator set cannot produce a primitive idempotent."""


def radon_hurwitz(i: int) -> int:
    """Radon-Hurwitz number r_i.

    r_0..r_7 = 0,1,2,2,3,3,3,3 with r_{i+8} = r_i + 4; extended to
    negative arguments by r_{-1} = -1 and r_{-i} = 1 - i + r_{i-2}.
    """
    if i < -12:
        raise ValueError(f"radon_hurwitz argument {i} below supported range -12")
    if i == -1:
        return -1
    if i < 0:
        return 1 + i + radon_hurwitz(-i - 2)
    if i < 8:
        return _RH_BASE[i]
    return radon_hurwitz(i - 8) + 4


def _blade_name(mask: int) -> str:
    return "e" + "".join(map(str, mask_indices(mask))) if mask else "1"


@dataclass(frozen=True)
class IdempotentSpec:
    """Signature plus signed generator blades (sign, index tuple)."""

    sig: Signature
    generators: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        gens = tuple((s, tuple(t)) for s, t in self.generators)
        for s, t in gens:
            if s not in (1, -1):
                raise ValueError(f"generator sign must be +1 or -1, got {s}")
            blade_mask(t, self.sig.n)  # raises on malformed blades
        object.__setattr__(self, "generators", gens)

    def masks(self) -> tuple[int, ...]:
        return tuple(blade_mask(t, self.sig.n) for _, t in self.generators)


@dataclass(frozen=True)
class GeneratorReport:
    ok: bool
    k: int
    expected_k: int
    violations: tuple[str, ...]


def _f2_dependent(masks: Sequence[int]) -> int | None:
    """Index of the first mask in the F_2-span of its predecessors, else None."""
    basis: dict[int, int] = {}  # leading bit -> reduced mask
    for pos, mask in enumerate(masks):
        m = mask
        while m:
            lead = m.bit_length() - 1
            if lead not in basis:
                basis[lead] = m
                break
            m ^= basis[lead]
        if m == 0:
            return pos
    return None


def validate_generators(spec: IdempotentSpec) -> GeneratorReport:
    """Check the four conditions for a generator set, reporting every violation."""
    sig = spec.sig
    violations: list[str] = []
    masks = spec.masks()

    for _, t in spec.generators:
        if blade_square_sign(t, sig) != 1:
            violations.append(f"generator {_blade_name(blade_mask(t, sig.n))} squares to -1")

    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            sij, _ = blade_product_masks(masks[i], masks[j], sig)
            sji, _ = blade_product_masks(masks[j], masks[i], sig)
            if sij != sji:
                violations.append(
                    f"generators {_blade_name(masks[i])} and {_blade_name(masks[j])} anticommute"
                )

    dep = _f2_dependent(masks)
    if dep is not None:
        violations.append(
            f"generator {_blade_name(masks[dep])} is a product of earlier generators"
        )

    expected = sig.q - radon_hurwitz(sig.q - sig.p)
    k = len(masks)
    if k != expected:
        violations.append(f"expected {expected} generators for {sig}, got {k}")

    return GeneratorReport(ok=not violations, k=k, expected_k=expected, violations=tuple(violations))


def build_idempotent(spec: IdempotentSpec) -> Multivector:
    """Expand prod (1 + s_i e_{t_i}) / 2 exactly.

    Raises GeneratorError if the generator set fails validation.
    """
    report = validate_generators(spec)
    if not report.ok:
        raise GeneratorError("; ".join(report.violations))
    sig = spec.sig
    f = Multivector.scalar(sig, 1)
    half = Fraction(1, 2)
    for s, t in spec.generators:
        factor = Multivector(sig, {0: half, blade_mask(t, sig.n): s * half})
        f = f * factor
    return f


def is_idempotent(x: Multivector) -> bool:
    return x * x == x


def is_orthogonal(f: Multivector, g: Multivector) -> bool:
    """True iff f*g = g*f = 0."""
    return (f * g).is_zero() and (g * f).is_zero()


def is_sub_idempotent(f: Multivector, e: Multivector) -> bool:
    """True iff f and e are idempotents with f*e = e*f = f."""
    return is_idempotent(f) and is_idempotent(e) and f * e == f and e * f == f


@dataclass(frozen=True)
class IdealBasis:
    """Echelonized description of the left ideal Cl(p,q) * f."""

    idempotent: Multivector
    dimension: int
    basis: tuple[Multivector, ...]
    _rows: RowBasis = field(repr=False, compare=False)

    def contains(self, x: Multivector) -> bool:
        if x.sig != self.idempotent.sig:
            raise ValueError(f"signature mismatch: {x.sig} vs {self.idempotent.sig}")
        return self._rows.contains(x.term_map())


def _blade_order(n: int) -> list[int]:
    return sorted(range(1 << n), key=lambda m: (bin(m).count("1"), mask_indices(m)))


def left_ideal_basis(f: Multivector) -> IdealBasis:
    """Exact rank and basis of the left ideal generated by f.

    Runs every basis blade b through b*f and keeps those that enlarge the
    row span; for a primitive idempotent the resulting dimension matches
    the classification minimum.
    """
    if f.is_zero():
        raise ValueError("left ideal of the zero element is trivial")
    sig = f.sig
    rows = RowBasis()
    basis: list[Multivector] = []
    for mask in _blade_order(sig.n):
        candidate = Multivector(sig, {mask: Fraction(1)}) * f
        if rows.add(candidate.term_map()):
            basis.append(candidate)
    return IdealBasis(idempotent=f, dimension=rows.rank, basis=tuple(basis), _rows=rows)


def coset_basis(f: Multivector, candidates: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Select candidate blades b whose products b*f form a basis of the ideal.

    Candidates are taken in the given order; a candidate is kept iff it
    enlarges the span.  Raises ValueError when the surviving set does not
    span the whole ideal.
    """
    target = left_ideal_basis(f).dimension
    sig = f.sig
    rows = RowBasis()
    accepted: list[tuple[int, ...]] = []
    for cand in candidates:
        indices = tuple(cand)
        candidate = Multivector.blade(sig, indices) * f
        if rows.add(candidate.term_map()):
            accepted.append(indices)
    if rows.rank != target:
        raise ValueError(
            f"candidates insufficient to span the ideal (got rank {rows.rank} of {target})"
        )
    return accepted


@dataclass(frozen=True)
class AlgebraClass:
    """Wedderburn shape of R_{p,q}: one or two matrix algebras over R, C or H."""

    ring: str  # "R" | "C" | "H"
    matrix_size: int
    summands: int  # 1, or 2 for the q-p = 3, 7 (mod 8) doublings
    minimal_ideal_dim: int  # real dimension of a minimal left ideal

    def __str__(self) -> str:
        block = f"M_{self.matrix_size}({self.ring})"
        if self.summands == 2:
            return f"{block} ⊕ {block}"
        return block


_RING_DIM = {"R": 1, "C": 2, "H": 4}


def classify(sig: Signature) -> AlgebraClass:
    """Matrix-algebra type of R_{p,q} by (q - p) mod 8."""
    n = sig.n
    d = (sig.q - sig.p) % 8
    if d in (0, 6):
        ring, summands, m = "R", 1, 1 << (n // 2)
    elif d in (1, 5):
        ring, summands, m = "C", 1, 1 << ((n - 1) // 2)
    elif d in (2, 4):
        ring, summands, m = "H", 1, 1 << ((n - 2) // 2)
    elif d == 3:
        ring, summands, m = "H", 2, 1 << ((n - 3) // 2)
    else:  # d == 7
        ring, summands, m = "R", 2, 1 << ((n - 1) // 2)
    return AlgebraClass(ring=ring, matrix_size=m, summands=summands,
                        minimal_ideal_dim=m * _RING_DIM[ring])


def is_primitive(f: Multivector) -> bool:
    """True iff f is a nonzero idempotent whose ideal has the minimal dimension."""
    if f.is_zero() or not is_idempotent(f):
        return False
    return left_ideal_basis(f).dimension == classify(f.sig).minimal_ideal_dim


def decompose_algebra(spec: IdempotentSpec) -> list[Multivector]:
    """All 2^k idempotents from the sign choices prod (1 ± e_{t_i}) / 2.

    The generator blades are taken unsigned; the returned list enumerates
    sign vectors with +1 first in each slot, so the first entry is the
    all-plus idempotent.  The pieces are pairwise orthogonal and sum to 1.
    """
    report = validate_generators(spec)
    if not report.ok:
        raise GeneratorError("; ".join(report.violations))
    blades = tuple(t for _, t in spec.generators)
    out = []
    for signs in _iterproduct((1, -1), repeat=len(blades)):
        out.append(build_idempotent(IdempotentSpec(spec.sig, tuple(zip(signs, blades)))))
    return out
