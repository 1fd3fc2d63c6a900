#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sixreg {

class ZeroInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// k + l*j with j = e^{i*pi/3}, so j^2 = j - 1.
struct EisensteinInt {
  std::int64_t k = 0;
  std::int64_t l = 0;

  auto operator<=>(const EisensteinInt&) const = default;
  std::string to_string() const;
};

enum class LatticeClass { A, B, Bj };

EisensteinInt mul(EisensteinInt a, EisensteinInt b);
EisensteinInt add(EisensteinInt a, EisensteinInt b);
EisensteinInt neg(EisensteinInt a);
inline EisensteinInt sub(EisensteinInt a, EisensteinInt b) { return add(a, neg(b)); }
/// a * j^p for any integer p.
EisensteinInt mul_j_power(EisensteinInt a, int p);
std::int64_t norm(EisensteinInt z);

/// Throws ZeroInput for 0.
LatticeClass lattice_class(EisensteinInt z);
const char* to_string(LatticeClass c);

struct Factorization {
  int s = 0;
  int u = 0;
  EisensteinInt z_prime;  // class B, canonical under multiplication by j^2
};

/// z = (1+j)^s * z' * j^u up to a factor j^(2m). Throws ZeroInput for 0.
Factorization factor(EisensteinInt z);

/// (1+j)^s * z' * j^u.
EisensteinInt reconstruct(const Factorization& f);

/// Among z, z*j^2, z*j^4 pick k > 0, l >= 0 when possible, smallest l on ties.
EisensteinInt canonical_rotation(EisensteinInt z);

/// True when a and b differ by a power of j^2.
bool j2_equivalent(EisensteinInt a, EisensteinInt b);

}  // namespace sixreg
