"""Seeded random draws of parameters and classes for the self-check suites."""
from __future__ import annotations

import random
from fractions import Fraction

from .arith import GaussianRational, Matrix2
from .gluing import GluingParams
from .ktheory import ChernVector, Surface


class Sampler:
    def __init__(self, seed: int | str, e_max: int = 5, k_bound: int = 4):
        self.rng = random.Random(seed)
        self.e_max = e_max
        self.k_bound = k_bound

    def rational(self, bound: int = 12, max_den: int = 6) -> Fraction:
        return Fraction(self.rng.randint(-bound, bound), self.rng.randint(1, max_den))

    def positive_rational(self, bound: int = 12, max_den: int = 6) -> Fraction:
        return Fraction(self.rng.randint(1, bound), self.rng.randint(1, max_den))

    def negative_real(self) -> GaussianRational:
        return GaussianRational(-self.positive_rational(), 0)

    def half_plane_point(self, negative_axis_rate: float = 0.2) -> GaussianRational:
        if self.rng.random() < negative_axis_rate:
            return self.negative_real()
        return GaussianRational(self.rational(), self.positive_rational())

    def chern_vector(self) -> ChernVector:
        return ChernVector(self.rational(), self.rational(), self.rational(), self.rational())

    def e(self) -> int:
        return self.rng.randint(0, self.e_max)

    def surface(self) -> Surface:
        return Surface(self.e())

    def k(self) -> int:
        return self.rng.randint(-self.k_bound, self.k_bound)

    def matrix(self) -> Matrix2:
        while True:
            M = Matrix2(self.rational(), self.rational(), self.rational(), self.rational())
            if M.det > 0:
                return M

    def shifts(self, top: int = 3) -> tuple[int, int]:
        j2 = self.rng.randint(0, top)
        return (j2 + 1, j2)

    def params(self, m: int | None = None) -> GluingParams:
        m = m if m is not None else self.rng.randint(1, 4)
        zeta = [self.half_plane_point(), self.half_plane_point()]
        zeta_prime = [self.half_plane_point(), self.half_plane_point()]
        matrix = self.matrix() if m == 4 else None
        return GluingParams.of_type(
            self.e(), m, k=self.k(), zeta=zeta, k_prime=self.k(), zeta_prime=zeta_prime, matrix=matrix,
        )

    def wall_params(self, m: int) -> GluingParams:
        """Parameters on the wall W_0 of type ``m``."""
        if m in (1, 2):
            return GluingParams.of_type(self.e(), m, k=self.k(), zeta=[self.negative_real(), self.negative_real()])
        if m == 4:
            return GluingParams.of_type(self.e(), 4)
        zeta = [self.half_plane_point(), self.half_plane_point()]
        target = (zeta[0] + zeta[1]) * self.positive_rational()
        weight = Fraction(self.rng.randint(1, 9), 10)
        if target.im == 0:
            first = target * weight
        else:
            first = GaussianRational(weight * target.re + self.rational(), weight * target.im)
        return GluingParams.of_type(
            self.e(), 3, k=self.k(), zeta=zeta, k_prime=self.k(), zeta_prime=[first, target - first],
        )
