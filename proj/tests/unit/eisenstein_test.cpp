#include <doctest.h>

#include "sixreg/eisenstein.hpp"

using namespace sixreg;

TEST_CASE("j squared is j minus one") {
  const EisensteinInt j{0, 1};
  CHECK(mul(j, j) == EisensteinInt{-1, 1});
  CHECK(mul_j_power({1, 0}, 6) == EisensteinInt{1, 0});
  CHECK(mul_j_power({2, 1}, -1) == mul_j_power({2, 1}, 5));
}

TEST_CASE("norm is multiplicative") {
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          const EisensteinInt x{a, b}, y{c, d};
          CHECK(norm(mul(x, y)) == norm(x) * norm(y));
        }
  CHECK(norm({2, 1}) == 7);
  CHECK(norm({1, 1}) == 3);
}

TEST_CASE("lattice classes") {
  CHECK(lattice_class({1, 1}) == LatticeClass::A);
  CHECK(lattice_class({3, 0}) == LatticeClass::A);
  CHECK(lattice_class({2, 1}) == LatticeClass::B);
  CHECK(lattice_class({1, 0}) == LatticeClass::B);
  CHECK_THROWS_AS(lattice_class({0, 0}), ZeroInput);
  CHECK_THROWS_AS(factor({0, 0}), ZeroInput);
}

TEST_CASE("factorisation round trip") {
  for (int k = -6; k <= 6; ++k)
    for (int l = -6; l <= 6; ++l) {
      if (k == 0 && l == 0) continue;
      const EisensteinInt z{k, l};
      const auto f = factor(z);
      CHECK(lattice_class(f.z_prime) != LatticeClass::A);
      CHECK(j2_equivalent(reconstruct(f), z));
    }
}

TEST_CASE("canonical rotation") {
  const EisensteinInt z{2, 1};
  for (int p = 0; p < 6; p += 2) CHECK(canonical_rotation(mul_j_power(z, p)) == canonical_rotation(z));
  CHECK(j2_equivalent(canonical_rotation(z), z));
  CHECK_FALSE(j2_equivalent({1, 0}, {0, 1}));
}
