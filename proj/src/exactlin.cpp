#include "dynkin_ar/exactlin.hpp"

#include <atomic>

namespace dar {
namespace {

std::atomic<uint64_t> fp_modulus{1000003};
std::atomic<bool> fp_used{false};

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

uint64_t Fp::modulus() {
  fp_used.store(true, std::memory_order_relaxed);
  return fp_modulus.load(std::memory_order_relaxed);
}

void Fp::set_modulus(uint64_t p) {
  require(p > 1000000, "InvalidModulus", "prime modulus must exceed 10^6");
  require(p < (1ull << 31), "InvalidModulus", "prime modulus must fit in 31 bits");
  require(is_prime(p), "InvalidModulus", "modulus is not prime");
  if (fp_used.load(std::memory_order_relaxed) && p != fp_modulus.load(std::memory_order_relaxed))
    fail("InvalidModulus", "prime modulus is fixed per session and already in use");
  fp_modulus.store(p, std::memory_order_relaxed);
}

Fp Fp::inverse() const {
  require(v_ != 0, "DivisionByZero", "inverse of zero residue");
  // extended Euclid on (v, p)
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(modulus()), new_r = static_cast<int64_t>(v_);
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(modulus());
  Fp out;
  out += Fp(static_cast<long>(t));
  return out;
}

}  // namespace dar
