#include "sixreg/eisenstein.hpp"

#include <array>

namespace sixreg {

std::string EisensteinInt::to_string() const { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

EisensteinInt mul(EisensteinInt a, EisensteinInt b) {
  return {a.k * b.k - a.l * b.l, a.k * b.l + a.l * b.k + a.l * b.l};
}

EisensteinInt add(EisensteinInt a, EisensteinInt b) { return {a.k + b.k, a.l + b.l}; }

EisensteinInt neg(EisensteinInt a) { return {-a.k, -a.l}; }

EisensteinInt mul_j_power(EisensteinInt a, int p) {
  p = ((p % 6) + 6) % 6;
  for (int i = 0; i < p; ++i) a = {-a.l, a.k + a.l};
  return a;
}

std::int64_t norm(EisensteinInt z) { return z.k * z.k + z.k * z.l + z.l * z.l; }

LatticeClass lattice_class(EisensteinInt z) {
  if (z.k == 0 && z.l == 0) throw ZeroInput("lattice class of 0");
  const auto r = (((z.k - z.l) % 3) + 3) % 3;
  return r == 0 ? LatticeClass::A : r == 1 ? LatticeClass::B : LatticeClass::Bj;
}

const char* to_string(LatticeClass c) {
  switch (c) {
    case LatticeClass::A: return "A";
    case LatticeClass::B: return "B";
    case LatticeClass::Bj: return "Bj";
  }
  return "?";
}

EisensteinInt canonical_rotation(EisensteinInt z) {
  const std::array<EisensteinInt, 3> options = {z, mul_j_power(z, 2), mul_j_power(z, 4)};
  const EisensteinInt* best = nullptr;
  auto preferred = [](const EisensteinInt& a) { return a.k > 0 && a.l >= 0; };
  for (const auto& o : options) {
    if (!best) {
      best = &o;
      continue;
    }
    const bool po = preferred(o), pb = preferred(*best);
    if (po != pb) {
      if (po) best = &o;
      continue;
    }
    if (o.l < best->l || (o.l == best->l && o.k > best->k)) best = &o;
  }
  return *best;
}

bool j2_equivalent(EisensteinInt a, EisensteinInt b) {
  return a == b || mul_j_power(a, 2) == b || mul_j_power(a, 4) == b;
}

Factorization factor(EisensteinInt z) {
  if (z.k == 0 && z.l == 0) throw ZeroInput("factor of 0");
  Factorization f;
  // dividing by 1+j: (k + l j)(2 - j) / 3 = ((2k + l) + (l - k) j) / 3
  while (lattice_class(z) == LatticeClass::A) {
    z = {(2 * z.k + z.l) / 3, (z.l - z.k) / 3};
    ++f.s;
  }
  if (lattice_class(z) == LatticeClass::Bj) {
    z = mul_j_power(z, -1);
    f.u = 1;
  }
  f.z_prime = canonical_rotation(z);
  return f;
}

EisensteinInt reconstruct(const Factorization& f) {
  EisensteinInt z = f.z_prime;
  for (int i = 0; i < f.s; ++i) z = mul(z, {1, 1});
  return mul_j_power(z, f.u);
}

}  // namespace sixreg
