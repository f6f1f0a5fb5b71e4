"""Quotient rings A/n and the Chinese remainder isomorphism."""

from .poly import NonUnitError, Poly


class Residue:
    """Element of A/n stored as its reduced representative."""

    __slots__ = ("value", "modulus")

    def __init__(self, value, modulus):
        if not modulus or not modulus.is_monic():
            raise ValueError("modulus must be a monic nonzero polynomial")
        if isinstance(value, int):
            value = Poly.const(modulus.F, modulus.F(value))
        self.value = value % modulus
        self.modulus = modulus

    def _other(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, (Poly, int)):
            return other
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o, self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(self.value.powmod(e, self.modulus), self.modulus)

    def inverse(self):
        return Residue(self.value.invmod(self.modulus), self.modulus)

    def is_unit(self):
        return self.value.gcd(self.modulus).is_one()

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (Poly, int)):
            return self.value == Residue(other, self.modulus).value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"Residue({self.value} mod {self.modulus})"


def crt_split(x, factors):
    """Components of x mod each prime power p^r in ``factors``."""
    n = x.modulus if isinstance(x, Residue) else None
    moduli = [p**r for p, r in factors]
    if n is not None:
        prod = Poly.one(n.F)
        for m in moduli:
            prod = prod * m
        if prod != n:
            raise ValueError(f"factorization does not match modulus {n}")
        x = x.value
    return tuple(Residue(x, m) for m in moduli)


def crt_join(components):
    """The unique residue mod the product of the component moduli."""
    if not components:
        raise ValueError("no components")
    F = components[0].modulus.F
    n = Poly.one(F)
    for c in components:
        n = n * c.modulus
    total = Poly.zero(F)
    for c in components:
        m = c.modulus
        rest = n // m
        inv = rest.invmod(m)
        if (rest * inv) % m != 1:
            raise ValueError("moduli are not pairwise coprime")
        total = total + c.value * inv % m * rest
    return Residue(total, n)


__all__ = ["Residue", "NonUnitError", "crt_split", "crt_join"]
