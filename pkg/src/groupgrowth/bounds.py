"""Closed-form growth lower bounds with exact hypothesis checking.

Spectral data of 2x2 integer matrices is kept exact: the dominant root
modulus lives in a quadratic field and every comparison (against 1, 2, or
another root) is decided by integer sign analysis, never floating point.
Floats appear only in the final reported bound values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvalidGenus
from .groups import GroupSpec, MatrixZ2, group_order

SQRT2 = math.sqrt(2.0)
FOURTH_ROOT_2 = 2.0 ** 0.25
SOLVABLE_UNIVERSAL = 2.0 ** (1.0 / 6.0)

THEOREMS = (
    "surface_4g3",
    "surface_2g1",
    "bucher_free_product",
    "bucher_harpe_amalgam",
    "bucher_harpe_hnn",
    "osin_polycyclic",
    "solvable_universal",
    "bcg",
    "universal_C",
)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _single_radical_sign(p: int, q: int, D: int) -> int:
    """Sign of p + q*sqrt(D) for integers, D >= 0."""
    if D == 0 or q == 0:
        return _sign(p)
    if p == 0:
        return _sign(q)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # mixed signs: compare |p| with |q|sqrt(D) by squaring
    diff = p * p - q * q * D
    if p > 0:
        return _sign(diff)
    return -_sign(diff)


def _two_radical_sign(a: int, b: int, D1: int, c: int, D2: int) -> int:
    """Sign of a + b*sqrt(D1) + c*sqrt(D2); D1, D2 squarefree or 0."""
    if D1 == 0 or b == 0:
        return _single_radical_sign(a, c, D2)
    if D2 == 0 or c == 0:
        return _single_radical_sign(a, b, D1)
    if D1 == D2:
        return _single_radical_sign(a, b + c, D1)
    # sign of M = b*sqrt(D1) + c*sqrt(D2); never zero for distinct squarefree D
    if b > 0 and c > 0:
        s_m = 1
    elif b < 0 and c < 0:
        s_m = -1
    else:
        s_m = _sign(b * b * D1 - c * c * D2) * (1 if b > 0 else -1)
    if a == 0:
        return s_m
    s_a = _sign(a)
    if s_a == s_m:
        return s_a
    # opposite signs: compare a^2 with M^2 = b^2 D1 + c^2 D2 + 2bc sqrt(D1 D2)
    s, D12 = squarefree_part(D1 * D2)
    t = _single_radical_sign(a * a - b * b * D1 - c * c * D2, -2 * b * c * s, D12)
    if t == 0:
        return 0
    return s_a if t > 0 else s_m


def squarefree_part(m: int) -> tuple[int, int]:
    """m = s^2 * D with D squarefree; returns (s, D). m must be >= 0."""
    if m < 0:
        raise ValueError("cannot decompose a negative radicand")
    if m == 0:
        return 0, 0
    s, D = 1, 1
    f = 2
    while f * f <= m:
        if m % f == 0:
            exp = 0
            while m % f == 0:
                m //= f
                exp += 1
            s *= f ** (exp // 2)
            if exp % 2:
                D *= f
        f += 1
    D *= m
    return s, D


class QuadraticValue:
    """Exact number of the form (p + q*sqrt(D))/2, integers p, q, D squarefree.

    Supports exact ordering against integers, Fractions, and other
    QuadraticValues (any D) via sign analysis.
    """

    __slots__ = ("p", "q", "D")

    def __init__(self, p: int, q: int, D: int):
        if D < 0:
            raise ValueError("radicand must be nonnegative")
        if q != 0 and D > 1:
            s, d0 = squarefree_part(D)
            q, D = q * s, d0
        if D <= 1:
            p, q, D = p + q * D, 0, 0  # sqrt(1) folds in, sqrt(0) vanishes
        if q == 0:
            D = 0
        self.p = p
        self.q = q
        self.D = D

    @classmethod
    def from_int(cls, n: int) -> "QuadraticValue":
        return cls(2 * n, 0, 0)

    @classmethod
    def sqrt_int(cls, m: int) -> "QuadraticValue":
        return cls(0, 2, m)

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.D)) / 2.0

    def _cmp(self, other) -> int:
        if isinstance(other, int):
            other = QuadraticValue.from_int(other)
        elif isinstance(other, Fraction):
            # compare (p+q sqrt(D))/2 with n/d: scale both by 2d
            d, n = other.denominator, other.numerator
            return _two_radical_sign(self.p * d - 2 * n, self.q * d, self.D, 0, 0)
        elif not isinstance(other, QuadraticValue):
            return NotImplemented
        return _two_radical_sign(self.p - other.p, self.q, self.D, -other.q, other.D)

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, 2))  # agree with equal ints/Fractions
        return hash((self.p, self.q, self.D))

    def __repr__(self) -> str:
        return f"QuadraticValue({self.exact_str()})"

    def exact_str(self) -> str:
        if self.q == 0:
            return str(self.p // 2) if self.p % 2 == 0 else f"{self.p}/2"
        if self.p % 2 == 0 and self.q % 2 == 0:
            rp, rq = self.p // 2, self.q // 2
            root = f"sqrt({self.D})" if abs(rq) == 1 else f"{abs(rq)}*sqrt({self.D})"
            if rp == 0:
                return root if rq > 0 else f"-{root}"
            return f"{rp}+{root}" if rq > 0 else f"{rp}-{root}"
        root = f"sqrt({self.D})" if abs(self.q) == 1 else f"{abs(self.q)}*sqrt({self.D})"
        sign = "+" if self.q > 0 else "-"
        return f"({self.p}{sign}{root})/2"


def lambda_max(A: MatrixZ2) -> QuadraticValue:
    """Largest root modulus of x^2 - tr(A) x + det(A), exactly.

    Real roots give (|tr| + sqrt(tr^2 - 4 det))/2; complex-conjugate pairs
    share modulus sqrt(|det|).
    """
    tr = abs(A.trace())
    det = A.det()
    disc = tr * tr - 4 * det
    if disc < 0:
        return QuadraticValue.sqrt_int(abs(det))
    s, D = squarefree_part(disc)
    return QuadraticValue(tr, s, D)


def is_hyperbolic(A: MatrixZ2) -> bool:
    """|det A| = 1 and no eigenvalue of modulus one (exact spectral test)."""
    return abs(A.det()) == 1 and lambda_max(A) > 1


@dataclass(frozen=True)
class BoundReport:
    """One theorem's verdict: hypothesis checks and the bound when they hold."""

    theorem: str
    hypotheses_ok: bool
    hypothesis_detail: tuple  # (name, ok, note) triples
    value: float | None
    exact_form: str | None = None
    notes: str | None = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses_ok": self.hypotheses_ok,
            "hypothesis_detail": [list(h) for h in self.hypothesis_detail],
            "value": None if self.value is None else float("%.12g" % self.value),
            "exact_form": self.exact_form,
            "notes": self.notes,
        }


def osin_bound(A: MatrixZ2) -> BoundReport:
    """2^(log L / (log 2 + log L)) with L the exact dominant root modulus."""
    lam = lambda_max(A)
    hyp = (
        ("abs_det_is_1", abs(A.det()) == 1, f"det = {A.det()}"),
        ("no_modulus_one_eigenvalue", lam > 1, f"Lambda = {lam.exact_str()}"),
    )
    ok = all(h[1] for h in hyp)
    if not ok:
        return BoundReport("osin_polycyclic", False, hyp, None)
    lf = float(lam)
    value = 2.0 ** (math.log(lf) / (math.log(2.0) + math.log(lf)))
    return BoundReport(
        "osin_polycyclic",
        True,
        hyp,
        value,
        exact_form=f"2^(log L/(log 2 + log L)), L = {lam.exact_str()}",
    )


def surface_bound(g: int, weak: bool = False) -> BoundReport:
    """Genus-g surface group bound 4g-3 (or the weaker companion 2g-1)."""
    if not isinstance(g, int) or g < 2:
        raise InvalidGenus(f"surface bound needs genus >= 2, got {g!r}")
    hyp = (("genus_ge_2", True, f"g = {g}"),)
    if weak:
        return BoundReport(
            "surface_2g1", True, hyp, float(2 * g - 1), exact_form=f"2g-1 = {2 * g - 1}"
        )
    return BoundReport(
        "surface_4g3",
        True,
        hyp,
        float(4 * g - 3),
        exact_form=f"4g-3 = {4 * g - 3}",
        notes=f"weaker companion estimate: 2g-1 = {2 * g - 1}",
    )


def _order_value(spec: GroupSpec):
    order = group_order(spec)
    return order.m if order.is_finite else math.inf


def free_product_bound(factors) -> BoundReport:
    """sqrt(2) for a nontrivial free product, excluding the Z2 * Z2 case.

    With three or more nontrivial factors the hypothesis always holds after
    grouping (any two factors already form an infinite group).
    """
    factors = list(factors)
    if len(factors) < 2:
        raise ValueError("a free product needs at least two factors")
    orders = sorted(_order_value(f) for f in factors)
    nontrivial = [o for o in orders if o > 1]
    if len(nontrivial) < 2:
        hyp = (("two_nontrivial_factors", False, f"orders {orders}"),)
        return BoundReport("bucher_free_product", False, hyp, None)
    if len(nontrivial) == 2:
        ok = nontrivial[0] >= 2 and nontrivial[1] >= 3
        note = f"|G1| = {nontrivial[0]}, |G2| = {nontrivial[1]}"
    else:
        ok = True
        note = f"{len(nontrivial)} nontrivial factors; grouped product is infinite"
    hyp = (
        ("two_nontrivial_factors", True, f"orders {orders}"),
        ("not_Z2_star_Z2", ok, note),
    )
    if not ok:
        return BoundReport("bucher_free_product", False, hyp, None)
    return BoundReport("bucher_free_product", True, hyp, SQRT2, exact_form="sqrt(2)")


def _validate_index(i, name: str):
    if i == math.inf:
        return math.inf
    if isinstance(i, int) and not isinstance(i, bool) and i >= 1:
        return i
    raise ValueError(f"{name} must be an integer >= 1 or infinity, got {i!r}")


def amalgam_bound(index1, index2) -> BoundReport:
    """2^(1/4) for an amalgam with ([G1:H]-1)([G2:H]-1) >= 2."""
    i1 = _validate_index(index1, "index1")
    i2 = _validate_index(index2, "index2")
    d1, d2 = i1 - 1, i2 - 1
    product = 0 if (d1 == 0 or d2 == 0) else d1 * d2  # inf * 0 reads as 0 here
    ok = product >= 2
    hyp = (("index_product_ge_2", ok, f"({_fmt_index(i1)}-1)({_fmt_index(i2)}-1) = {_fmt_index(product)}"),)
    value = FOURTH_ROOT_2 if ok else None
    return BoundReport(
        "bucher_harpe_amalgam", ok, hyp, value, exact_form="2^(1/4)" if ok else None
    )


def hnn_bound(index_h, index_k) -> BoundReport:
    """2^(1/4) for an HNN extension with [G:H] + [G:K] >= 3."""
    ih = _validate_index(index_h, "index_h")
    ik = _validate_index(index_k, "index_k")
    total = ih + ik
    ok = total >= 3
    hyp = (("index_sum_ge_3", ok, f"{_fmt_index(ih)}+{_fmt_index(ik)} = {_fmt_index(total)}"),)
    value = FOURTH_ROOT_2 if ok else None
    return BoundReport(
        "bucher_harpe_hnn", ok, hyp, value, exact_form="2^(1/4)" if ok else None
    )


def _fmt_index(i) -> str:
    return "inf" if i == math.inf else str(i)


def make_bcg_table(entries) -> dict:
    """Validate a user-supplied {(n, a): c} table of positive constants."""
    table = {}
    for key, c in dict(entries).items():
        n, a = key
        if not (isinstance(c, (int, float)) and c > 0):
            raise ValueError(f"constant for ({n}, {a}) must be positive, got {c!r}")
        table[(n, a)] = float(c)
    return table


def bcg_bound(n, a, table) -> BoundReport:
    """e^{c(n,a)} when the constant is supplied; no built-in values exist."""
    c = table.get((n, a)) if table else None
    if c is None:
        hyp = (("constant_supplied", False, f"no c({n},{a}) in table"),)
        return BoundReport(
            "bcg", False, hyp, None, notes="c(n,a) must be supplied by the caller"
        )
    hyp = (("constant_supplied", True, f"c({n},{a}) = {c}"),)
    return BoundReport("bcg", True, hyp, math.exp(c), exact_form=f"e^{{{c}}}")


def solvable_bound() -> BoundReport:
    """The literal 2^(1/6) bound for the solvable (torus-bundle) branch."""
    hyp = (("always", True, "no hypothesis"),)
    return BoundReport("solvable_universal", True, hyp, SOLVABLE_UNIVERSAL, exact_form="2^(1/6)")


@dataclass(frozen=True)
class TransferBound:
    """Growth bound pushed from a finite-index subgroup to the whole group."""

    value: float
    omega_sub: float
    degree: int
    exponent: float
    rule: str


def finite_index_transfer(omega_sub: float, degree: int, exponent_rule=None, rule_label: str | None = None) -> TransferBound:
    """omega_sub^(e(degree)); the default exponent rule is e(d) = 1/(2d+1).

    The rule is configurable because no canonical exponent is fixed by the
    theory consumed here; whichever rule is used is recorded in the result.
    """
    if omega_sub < 1:
        raise DomainError(f"subgroup growth rate must be >= 1, got {omega_sub}")
    if not isinstance(degree, int) or degree < 1:
        raise ValueError(f"covering degree must be an integer >= 1, got {degree!r}")
    if exponent_rule is None:
        exponent = 1.0 / (2 * degree + 1)
        label = "1/(2d+1)"
    else:
        exponent = float(exponent_rule(degree))
        label = rule_label or "custom"
    return TransferBound(
        value=omega_sub ** exponent,
        omega_sub=omega_sub,
        degree=degree,
        exponent=exponent,
        rule=label,
    )


@dataclass(frozen=True)
class ScanRow:
    a: int
    b: int
    c: int
    d: int
    det: int
    trace: int
    lam: QuadraticValue
    osin: float


@dataclass(frozen=True)
class ScanClassSummary:
    det: int
    count: int
    min_lambda: QuadraticValue | None
    min_osin: float | None
    lambda_le_2: bool
    witness: tuple | None  # (a, b, c, d) attaining min_lambda
    note: str | None = None


@dataclass(frozen=True)
class ScanReport:
    entry_bound: int
    rows: tuple
    classes: tuple  # summaries for det = +1 and det = -1


def scan_hyperbolic(entry_bound: int) -> ScanReport:
    """All hyperbolic matrices with |entries| <= entry_bound, by determinant class.

    Rows come out in lexicographic (a, b, c, d) order; per class the report
    keeps the exact minimal root modulus, the minimal Osin value, and whether
    any modulus <= 2 occurred.
    """
    if entry_bound < 0:
        raise ValueError("entry bound must be >= 0")
    rows = []
    agg = {1: None, -1: None}  # det -> [count, min_lam, min_osin, le2, witness]
    span = range(-entry_bound, entry_bound + 1)
    for a in span:
        for b in span:
            for c in span:
                for d in span:
                    det = a * d - b * c
                    if det not in (1, -1):
                        continue
                    m = MatrixZ2(a, b, c, d)
                    lam = lambda_max(m)
                    if not lam > 1:
                        continue
                    report = osin_bound(m)
                    row = ScanRow(a, b, c, d, det, a + d, lam, report.value)
                    rows.append(row)
                    slot = agg[det]
                    if slot is None:
                        agg[det] = [1, lam, report.value, lam <= 2, (a, b, c, d)]
                    else:
                        slot[0] += 1
                        if lam < slot[1]:
                            slot[1] = lam
                            slot[4] = (a, b, c, d)
                        slot[2] = min(slot[2], report.value)
                        slot[3] = slot[3] or lam <= 2
    classes = []
    for det in (1, -1):
        slot = agg[det]
        if slot is None:
            classes.append(ScanClassSummary(det, 0, None, None, False, None))
            continue
        note = None
        if det == 1 and not slot[3]:
            note = "every det=+1 stretch factor exceeds 2"
        elif det == -1 and slot[3]:
            # The shortcut 'Lambda(A) > 2' behind the 2^(1/6) solvable constant
            # only holds for det=+1; det=-1 monodromies can dip below it.
            note = (
                "minimal stretch factor is <= 2, so the shortcut bound "
                "Lambda > 2 holds only in the det=+1 class; "
                "discrepancy kept under investigation"
            )
        classes.append(
            ScanClassSummary(det, slot[0], slot[1], slot[2], slot[3], slot[4], note)
        )
    return ScanReport(entry_bound=entry_bound, rows=tuple(rows), classes=tuple(classes))


def scan_csv_rows(report: ScanReport) -> list[str]:
    """CSV lines `det,trace,a,b,c,d,lambda_exact,lambda_float,osin_bound`."""
    lines = ["det,trace,a,b,c,d,lambda_exact,lambda_float,osin_bound"]
    for r in report.rows:
        lines.append(
            f"{r.det},{r.trace},{r.a},{r.b},{r.c},{r.d},"
            f"{r.lam.exact_str()},{float(r.lam):.12g},{r.osin:.12g}"
        )
    return lines


def write_scan_csv(report: ScanReport, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(scan_csv_rows(report)) + "\n")
