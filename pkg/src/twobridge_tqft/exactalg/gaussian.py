"""Polynomials over the Gaussian integers, kept as a pair (re, im)."""
from .poly import UniPoly


class GaussianPoly:
    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        re = re if re is not None else UniPoly()
        im = im if im is not None else UniPoly()
        if not (re.is_integral() and im.is_integral()):
            raise ValueError("Gaussian polynomial coefficients must be integers")
        self.re, self.im = re, im

    @classmethod
    def from_ints(cls, re=(), im=()):
        return cls(UniPoly.from_ints(list(re)), UniPoly.from_ints(list(im)))

    def __add__(self, o):
        return GaussianPoly(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GaussianPoly(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GaussianPoly(-self.re, -self.im)

    def __mul__(self, o):
        if isinstance(o, int):
            return GaussianPoly(self.re * o, self.im * o)
        return GaussianPoly(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussianPoly(self.re, -self.im)

    def times_i(self, k=1):
        """Multiply by i^k."""
        k %= 4
        if k == 0:
            return self
        if k == 1:
            return GaussianPoly(-self.im, self.re)
        if k == 2:
            return -self
        return GaussianPoly(self.im, -self.re)

    def is_real(self):
        return self.im.is_zero()

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, o):
        return isinstance(o, GaussianPoly) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianPoly(re={self.re!r}, im={self.im!r})"
