"""SU(3), G2 and Spin(7) model structures and their spinor idempotents.

The bridge runs in both directions: a normalized structure tensor set
determines a primitive idempotent through quantization and Hodge duals
(all taken under the EXT_DUAL_FIRST convention), and conversely the
graded pieces of W = f / <f>_0 recover the structure tensors through
the symbol map.  All recoveries are exact; every constructor formula
is checked for idempotency at runtime so that scaled or degenerate
inputs are rejected instead of silently producing garbage.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Multivector, Signature
from .exterior import (
    ExteriorForm,
    HodgeConvention,
    clifford_hodge,
    hodge_star,
    interior_product,
    quantize,
    symbol,
    wedge,
)
from .exprio import SchemaError, from_json_obj, to_json_obj
from .ideals import is_idempotent, is_primitive
from .linalg import det, leading_principal_minors

_STAR = HodgeConvention.EXT_DUAL_FIRST


class StructureError(ValueError):
    """Degenerate, unnormalized or otherwise invalid structure data."""


def _check_form(form: ExteriorForm, n: int, k: int, name: str) -> None:
    if form.n != n:
        raise StructureError(f"{name} must live on (R^{n})*, got dimension {form.n}")
    if any(g != k for g in form.grades()):
        raise StructureError(f"{name} must be a pure {k}-form")


@dataclass(frozen=True)
class SU3Structure:
    """omega (2-form) and psi_plus/psi_minus (3-forms) on (R^6)*."""

    omega: ExteriorForm
    psi_plus: ExteriorForm
    psi_minus: ExteriorForm

    def __post_init__(self) -> None:
        _check_form(self.omega, 6, 2, "omega")
        _check_form(self.psi_plus, 6, 3, "psi_plus")
        _check_form(self.psi_minus, 6, 3, "psi_minus")


@dataclass(frozen=True)
class G2Structure:
    """phi, a 3-form on (R^7)*."""

    phi: ExteriorForm

    def __post_init__(self) -> None:
        _check_form(self.phi, 7, 3, "phi")


@dataclass(frozen=True)
class Spin7Structure:
    """The Cayley 4-form on (R^8)*."""

    cayley: ExteriorForm

    def __post_init__(self) -> None:
        _check_form(self.cayley, 8, 4, "cayley")


@dataclass(frozen=True)
class OrbitReport:
    """Symmetric bilinear form induced by a 3-form on R^7, with its orbit tag."""

    metric: tuple[tuple[Fraction, ...], ...]
    determinant: Fraction
    tag: str  # "definite" | "split" | "degenerate"


def model_su3() -> SU3Structure:
    return SU3Structure(
        omega=ExteriorForm.from_terms(6, [(1, (1, 2)), (1, (3, 4)), (1, (5, 6))]),
        psi_plus=ExteriorForm.from_terms(
            6, [(1, (1, 3, 5)), (-1, (1, 4, 6)), (-1, (2, 3, 6)), (-1, (2, 4, 5))]
        ),
        psi_minus=ExteriorForm.from_terms(
            6, [(1, (1, 3, 6)), (1, (1, 4, 5)), (1, (2, 3, 5)), (-1, (2, 4, 6))]
        ),
    )


def model_g2() -> G2Structure:
    return G2Structure(
        phi=ExteriorForm.from_terms(
            7,
            [
                (1, (1, 2, 3)),
                (1, (1, 4, 5)),
                (1, (1, 6, 7)),
                (1, (2, 4, 6)),
                (-1, (2, 5, 7)),
                (-1, (3, 4, 7)),
                (-1, (3, 5, 6)),
            ],
        )
    )


def model_spin7() -> Spin7Structure:
    return Spin7Structure(
        cayley=ExteriorForm.from_terms(
            8,
            [
                (1, (1, 2, 3, 4)),
                (1, (1, 2, 5, 6)),
                (1, (1, 2, 7, 8)),
                (1, (1, 3, 5, 7)),
                (-1, (1, 3, 6, 8)),
                (-1, (1, 4, 5, 8)),
                (-1, (1, 4, 6, 7)),
                (-1, (2, 3, 5, 8)),
                (-1, (2, 3, 6, 7)),
                (-1, (2, 4, 5, 7)),
                (1, (2, 4, 6, 8)),
                (1, (3, 4, 5, 6)),
                (1, (3, 4, 7, 8)),
                (1, (5, 6, 7, 8)),
            ],
        )
    )


def _volume_constant(w: ExteriorForm, name: str) -> Fraction:
    """Coefficient c of w = c * vol; rejects anything off the volume line."""
    top = (1 << w.n) - 1
    terms = w.term_map()
    c = terms.pop(top, Fraction(0))
    if terms or not c:
        raise StructureError(f"{name} must be a nonzero multiple of the volume form")
    return c


# -- SU(3), dimension 6 --------------------------------------------------

def su3_idempotent(s: SU3Structure) -> Multivector:
    """Idempotent of R_{0,6} attached to a normalized SU(3) structure.

    Computes (1/32) (star q(psi+ ^ psi-) + 4 q(psi+) - 4 star q(omega))
    with the Clifford Hodge dual taken under EXT_DUAL_FIRST, and verifies
    idempotency; unnormalized inputs fail that check and are rejected.
    """
    _volume_constant(wedge(s.psi_plus, s.psi_minus), "psi+ ^ psi-")
    f = (
        clifford_hodge(quantize(wedge(s.psi_plus, s.psi_minus)), _STAR)
        + quantize(s.psi_plus).scale(4)
        - clifford_hodge(quantize(s.omega), _STAR).scale(4)
    ).scale(Fraction(1, 32))
    if not is_idempotent(f):
        raise StructureError("input does not induce an idempotent (not a normalized SU(3) structure)")
    return f


def su3_recover(x: Multivector) -> SU3Structure:
    """Read the structure tensors off an idempotent of R_{0,6}.

    With W = x / <x>_0: psi+ = symbol(<W>_3), psi- = -symbol(star <W>_3)
    and omega = -symbol(star <W>_4), stars under EXT_DUAL_FIRST.
    """
    if x.sig != Signature(0, 6):
        raise StructureError(f"expected an element of R_{{0,6}}, got {x.sig}")
    c = x.scalar_part
    if not c:
        raise StructureError("cannot recover a structure: zero scalar part")
    w = x.scale(1 / c)
    w3 = w.grade(3)
    return SU3Structure(
        omega=-symbol(clifford_hodge(w.grade(4), _STAR)),
        psi_plus=symbol(w3),
        psi_minus=-symbol(clifford_hodge(w3, _STAR)),
    )


# -- G2, dimension 7 -----------------------------------------------------

def g2_metric(s: G2Structure) -> OrbitReport:
    """Bilinear form B with B_ij vol = (1/6) (i_i phi) ^ (i_j phi) ^ phi.

    The orbit tag comes from an exact Sylvester test: definite when B or
    -B has all leading principal minors positive, degenerate when det B
    vanishes, split otherwise.
    """
    phi = s.phi
    top = (1 << 7) - 1
    contractions = [interior_product(i, phi) for i in range(1, 8)]
    sixth = Fraction(1, 6)
    rows = []
    for i in range(7):
        row = []
        for j in range(7):
            w = wedge(wedge(contractions[i], contractions[j]), phi)
            row.append(sixth * w.term_map().get(top, Fraction(0)))
        rows.append(tuple(row))
    metric = tuple(rows)
    d = det([list(r) for r in rows])
    if not d:
        tag = "degenerate"
    else:
        plus = leading_principal_minors([list(r) for r in rows])
        minus = leading_principal_minors([[-v for v in r] for r in rows])
        if all(m > 0 for m in plus) or all(m > 0 for m in minus):
            tag = "definite"
        else:
            tag = "split"
    return OrbitReport(metric=metric, determinant=d, tag=tag)


def g2_idempotent(s: G2Structure) -> Multivector:
    """Idempotent of R_{0,7} attached to a G2 structure.

    Computes (1/112) (star q(phi ^ star phi) + 7 q(phi) - 7 q(star phi)
    - q(phi ^ star phi)) under EXT_DUAL_FIRST and verifies idempotency.
    Degenerate phi (by the induced metric) is rejected up front.
    """
    if g2_metric(s).tag == "degenerate":
        raise StructureError("phi induces a degenerate metric")
    star_phi = hodge_star(s.phi, _STAR)
    w = quantize(wedge(s.phi, star_phi))
    f = (
        clifford_hodge(w, _STAR)
        + quantize(s.phi).scale(7)
        - quantize(star_phi).scale(7)
        - w
    ).scale(Fraction(1, 112))
    if not is_idempotent(f):
        raise StructureError("input does not induce an idempotent (not a normalized G2 structure)")
    return f


def g2_recover(x: Multivector) -> tuple[G2Structure, ExteriorForm]:
    """(phi, 4-form) from an idempotent of R_{0,7}.

    With W = x / <x>_0: phi = symbol(<W>_3) and the 4-form is
    -symbol(<W>_4); for W coming from a G2 structure the 4-form equals
    hodge_star(phi) under EXT_DUAL_FIRST.
    """
    if x.sig != Signature(0, 7):
        raise StructureError(f"expected an element of R_{{0,7}}, got {x.sig}")
    c = x.scalar_part
    if not c:
        raise StructureError("cannot recover a structure: zero scalar part")
    w = x.scale(1 / c)
    phi = symbol(w.grade(3))
    if phi.is_zero():
        raise StructureError("cannot recover a structure: no grade-3 part")
    return G2Structure(phi=phi), -symbol(w.grade(4))


# -- Spin(7), dimension 8 ------------------------------------------------

def spin7_idempotent(s: Spin7Structure) -> Multivector:
    """Idempotent of R_{0,8} attached to a self-dual Cayley form.

    With Omega ^ Omega = c vol (c != 0 required) this computes
    (1/(16c)) star q(Omega ^ Omega) - (1/16) q(Omega)
    + (1/(16c)) q(Omega ^ Omega), i.e. (1/16)(1 - q(Omega) + q(vol)),
    and verifies idempotency.
    """
    omega = s.cayley
    if hodge_star(omega, _STAR) != omega:
        raise StructureError("the 4-form is not self-dual")
    w = wedge(omega, omega)
    c = _volume_constant(w, "Omega ^ Omega")
    qw = quantize(w)
    f = (
        clifford_hodge(qw, _STAR).scale(Fraction(1, 16 * c))
        - quantize(omega).scale(Fraction(1, 16))
        + qw.scale(Fraction(1, 16 * c))
    )
    if not is_idempotent(f):
        raise StructureError("input does not induce an idempotent (not a normalized Cayley form)")
    return f


def spin7_recover(x: Multivector) -> Spin7Structure:
    """Cayley form from an idempotent of R_{0,8}: -symbol(<W>_4), W = x / <x>_0.

    The output must be self-dual; anything else is rejected.
    """
    if x.sig != Signature(0, 8):
        raise StructureError(f"expected an element of R_{{0,8}}, got {x.sig}")
    c = x.scalar_part
    if not c:
        raise StructureError("cannot recover a structure: zero scalar part")
    w = x.scale(1 / c)
    omega = -symbol(w.grade(4))
    if hodge_star(omega, _STAR) != omega:
        raise StructureError("recovered 4-form is not self-dual")
    return Spin7Structure(cayley=omega)


# -- dimension ladder ----------------------------------------------------

def lift_su3_to_g2(s: SU3Structure) -> G2Structure:
    """phi = omega ^ e^7 + psi_plus on R^7 = R^6 (+) R."""
    _volume_constant(wedge(s.psi_plus, s.psi_minus), "psi+ ^ psi-")
    e7 = ExteriorForm.blade(7, (7,))
    phi = wedge(s.omega.embed(7), e7) + s.psi_plus.embed(7)
    return G2Structure(phi=phi)


def lift_idempotent_6_to_7(f6: Multivector) -> Multivector:
    """Primitive idempotent of R_{0,7} from one of R_{0,6}.

    Recovers the SU(3) tensors from f6, lifts them to a G2 structure on
    R^7 and rebuilds the idempotent there.
    """
    if not is_primitive(f6):
        raise StructureError("input is not a primitive idempotent of R_{0,6}")
    return g2_idempotent(lift_su3_to_g2(su3_recover(f6)))


# -- JSON wrapping -------------------------------------------------------

_FIELDS = {"su3": ("omega", "psi_plus", "psi_minus"), "g2": ("phi",), "spin7": ("cayley",)}
_DIMS = {"su3": 6, "g2": 7, "spin7": 8}


def structure_to_json_obj(s) -> dict:
    if isinstance(s, SU3Structure):
        return {
            "structure": "su3",
            "omega": to_json_obj(s.omega),
            "psi_plus": to_json_obj(s.psi_plus),
            "psi_minus": to_json_obj(s.psi_minus),
        }
    if isinstance(s, G2Structure):
        return {"structure": "g2", "phi": to_json_obj(s.phi)}
    if isinstance(s, Spin7Structure):
        return {"structure": "spin7", "cayley": to_json_obj(s.cayley)}
    raise TypeError(f"cannot serialize {type(s).__name__}")


def structure_to_json(s) -> str:
    return json.dumps(structure_to_json_obj(s), separators=(", ", ": "))


def structure_from_json_obj(obj):
    if not isinstance(obj, dict):
        raise SchemaError("expected an object", "")
    kind = obj.get("structure")
    if kind not in _FIELDS:
        raise SchemaError("expected 'su3', 'g2' or 'spin7'", "structure")
    forms = {}
    for field in _FIELDS[kind]:
        if field not in obj:
            raise SchemaError(f"missing field '{field}'", field)
        value = from_json_obj(obj[field], path=field)
        if not isinstance(value, ExteriorForm):
            raise SchemaError("expected kind 'form'", f"{field}.kind")
        if value.n != _DIMS[kind]:
            raise SchemaError(f"expected a form on (R^{_DIMS[kind]})*", f"{field}.signature")
        forms[field] = value
    try:
        if kind == "su3":
            return SU3Structure(**forms)
        if kind == "g2":
            return G2Structure(**forms)
        return Spin7Structure(**forms)
    except StructureError as exc:
        raise SchemaError(str(exc), "") from None


def structure_from_json(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", "") from None
    return structure_from_json_obj(obj)
