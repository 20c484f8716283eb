"""Two-row Schubert calculus on the Grassmannian Gr(2, N) of pencils.

Classes are integer combinations of basis classes s(a, b) indexed by
partitions N-2 >= a >= b >= 0.  Multiplication reduces to the Pieri rule
through the specialization s(c, e) = s(1,1)^e * s(c-e, 0); two-row
structure constants are all 0 or 1, so nothing more general is needed.
Partitions leaving the (N-2) x 2 box are dropped as zero (the quotient
ring convention), which several closed forms below rely on.
"""

from __future__ import annotations

from .errors import DomainError

__all__ = [
    "Partition",
    "SchubertClass",
    "sigma",
    "unit",
    "zero",
    "pieri_mul",
    "mul",
    "integrate",
    "sigma1_power",
    "fourfold_integral",
    "magic_integral",
]

Partition = tuple[int, int]


class SchubertClass:
    """Immutable integer combination of basis classes on a fixed Gr(2, N).

    ``terms`` maps (a, b) with a >= b >= 0 to a nonzero coefficient; an
    absent key means coefficient 0.  Terms with a > N - 2 vanish on
    Gr(2, N) and are dropped at construction.
    """

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: int, terms: dict[Partition, int] | None = None):
        if ambient < 2:
            raise DomainError(f"Gr(2, N) requires N >= 2, got N={ambient}")
        clean: dict[Partition, int] = {}
        for (a, b), c in (terms or {}).items():
            if not a >= b >= 0:
                raise DomainError(f"({a}, {b}) is not a two-row partition")
            if c != 0 and a <= ambient - 2:
                clean[(a, b)] = c
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SchubertClass is immutable")

    def coefficient(self, a: int, b: int) -> int:
        return self.terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_ambient(self, other: "SchubertClass") -> None:
        if self.ambient != other.ambient:
            raise DomainError(
                f"ambient mismatch: Gr(2,{self.ambient}) vs Gr(2,{other.ambient})"
            )

    def __add__(self, other: "SchubertClass") -> "SchubertClass":
        self._check_ambient(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return SchubertClass(self.ambient, out)

    def __neg__(self) -> "SchubertClass":
        return SchubertClass(self.ambient, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "SchubertClass") -> "SchubertClass":
        return self + (-other)

    def __mul__(self, other: "SchubertClass | int") -> "SchubertClass":
        if isinstance(other, int):
            return SchubertClass(
                self.ambient, {k: c * other for k, c in self.terms.items()}
            )
        return mul(self, other)

    def __rmul__(self, other: int) -> "SchubertClass":
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 on Gr(2,{self.ambient})"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            lead = "" if c == 1 else f"{c}*"
            bits.append(f"{lead}s({a},{b})")
        return " + ".join(bits) + f" on Gr(2,{self.ambient})"


def zero(ambient: int) -> SchubertClass:
    return SchubertClass(ambient)


def unit(ambient: int) -> SchubertClass:
    return SchubertClass(ambient, {(0, 0): 1})


def sigma(a: int, b: int, ambient: int) -> SchubertClass:
    """Basis class s(a, b), or the zero class when it leaves the box."""
    if not a >= b >= 0:
        raise DomainError(f"({a}, {b}) is not a two-row partition")
    return SchubertClass(ambient, {(a, b): 1})


def pieri_mul(c: SchubertClass, k: int) -> SchubertClass:
    """Multiply by the special class s(k, 0).

    Pieri rule: s(a,b) * s(k,0) = sum of s(a', b') over a' + b' = a + b + k
    with a' >= a >= b' >= b, truncated to the box.
    """
    if k < 0:
        raise DomainError(f"pieri_mul: special class index must be >= 0, got {k}")
    out: dict[Partition, int] = {}
    for (a, b), coeff in c.terms.items():
        for bp in range(b, min(a, b + k) + 1):
            ap = a + b + k - bp
            if ap <= c.ambient - 2:
                key = (ap, bp)
                out[key] = out.get(key, 0) + coeff
    return SchubertClass(c.ambient, out)


def mul(c1: SchubertClass, c2: SchubertClass) -> SchubertClass:
    """Product in the Chow ring, via s(c, e) = s(1,1)^e * s(c-e, 0)."""
    c1._check_ambient(c2)
    ambient = c1.ambient
    total = zero(ambient)
    for (c, e), q in c2.terms.items():
        # multiplying by s(1,1)^e shifts both rows up by e
        shifted: dict[Partition, int] = {}
        for (a, b), coeff in c1.terms.items():
            if a + e <= ambient - 2:
                shifted[(a + e, b + e)] = coeff * q
        total = total + pieri_mul(SchubertClass(ambient, shifted), c - e)
    return total


def integrate(c: SchubertClass) -> int:
    """Coefficient of the point class s(N-2, N-2)."""
    top = c.ambient - 2
    return c.coefficient(top, top)


def sigma1_power(k: int, ambient: int) -> SchubertClass:
    """k-th power of s(1, 0), by repeated Pieri multiplication."""
    if k < 0:
        raise DomainError(f"sigma1_power: exponent must be >= 0, got {k}")
    out = unit(ambient)
    for _ in range(k):
        out = pieri_mul(out, 1)
    return out


def _sorted_checked(
    n1: int, n2: int, n3: int, n4: int, expected_sum: int, what: str
) -> tuple[int, int, int, int]:
    ns = sorted((n1, n2, n3, n4), reverse=True)
    if ns[3] < 0:
        raise DomainError(f"{what}: indices must be nonnegative, got {ns}")
    if sum(ns) != expected_sum:
        raise DomainError(
            f"{what}: off-shell, indices must sum to {expected_sum}, got {sum(ns)}"
        )
    return ns[0], ns[1], ns[2], ns[3]


def fourfold_integral(n1: int, n2: int, n3: int, n4: int, ambient: int) -> int:
    """Integral of four special classes on Gr(2, N), N = ambient.

    Closed form min(N - n1 - 1, n4 + 1) after sorting descending, clamped
    at 0 (negative values occur exactly when the top class vanishes).
    Indices must sum to 2N - 4, the dimension of Gr(2, N).
    """
    n1, n2, n3, n4 = _sorted_checked(
        n1, n2, n3, n4, 2 * ambient - 4, "fourfold_integral"
    )
    return max(0, min(ambient - n1 - 1, n4 + 1))


def magic_integral(n1: int, n2: int, n3: int, n4: int, ambient: int) -> int:
    """Integral of four special classes against 8*s(1,1) - 2*s(1,0)^2.

    Ambient is Gr(2, d+1) with d = ambient - 1; the four indices must sum
    to 2d - 4.  The value depends only on the coincidence pattern of the
    sorted indices.
    """
    d = ambient - 1
    n1, n2, n3, n4 = _sorted_checked(n1, n2, n3, n4, 2 * d - 4, "magic_integral")
    if n1 == n2 == n3 == n4:
        return 6
    if n1 == n2 and n3 == n4:
        return 4
    if n1 + n4 == n2 + n3 and n1 != n2:
        return 2
    if n1 == n2 + n3 + n4 + 2:
        return -2
    return 0
