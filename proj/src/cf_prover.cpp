// Copyright 2026 The decbin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "decbin/cf_prover.hpp"

#include <stdexcept>
#include <string>

namespace decbin {

CFExpansion cf_expansion(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) <= 0) {
    throw std::invalid_argument("cf_expansion: denominator must be positive");
  }
  CFExpansion out{numerator, denominator, {}};
  BigInt n = numerator;
  BigInt d = denominator;
  BigInt a;
  BigInt r;
  while (sgn(d) != 0) {
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    out.coefficients.push_back(a);
    n = d;
    d = r;
  }
  return out;
}

std::pair<BigInt, BigInt> evaluate_nested(std::span<const BigInt> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("evaluate_nested: no coefficients");
  // Innermost first: x = a_n, then x = a_i + 1/x.
  BigInt num = coefficients.back();
  BigInt den = 1;
  for (std::size_t i = coefficients.size() - 1; i-- > 0;) {
    BigInt next_num = coefficients[i] * num + den;
    den = num;
    num = std::move(next_num);
  }
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = gcd(num, den);
  if (sgn(g) != 0) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::vector<Convergent> convergents(const CFExpansion& expansion) {
  std::vector<Convergent> out;
  out.reserve(expansion.coefficients.size());
  BigInt p_prev2 = 0, p_prev1 = 1;
  BigInt q_prev2 = 1, q_prev1 = 0;
  for (std::size_t n = 0; n < expansion.coefficients.size(); ++n) {
    const BigInt& a = expansion.coefficients[n];
    BigInt p = a * p_prev1 + p_prev2;
    BigInt q = a * q_prev1 + q_prev2;
    p_prev2 = std::move(p_prev1);
    p_prev1 = p;
    q_prev2 = std::move(q_prev1);
    q_prev1 = q;
    out.push_back(Convergent{n, std::move(p), std::move(q)});
  }
  return out;
}

bool is_convergent(const BigInt& p, const BigInt& q_den, const BigInt& numerator,
                   const BigInt& denominator) {
  if (sgn(q_den) <= 0) throw std::invalid_argument("is_convergent: q must be positive");
  const BigInt g = gcd(p, q_den);
  const BigInt rp = p / g;
  const BigInt rq = q_den / g;
  for (const Convergent& c : convergents(cf_expansion(numerator, denominator))) {
    if (c.p == rp && c.q_den == rq) return true;
  }
  return false;
}

BigInt residue(const BigInt& t, const BigInt& w, unsigned modulus_bits) {
  BigInt product = t * w;
  BigInt r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), product.get_mpz_t(), modulus_bits);
  return r;
}

PowerCheck check_power(const BigInt& multiplier, const ResidueCondition& condition, int q_power) {
  if (condition.bound_bits + condition.gap_bits + 1 > condition.modulus_bits) {
    throw std::invalid_argument("check_power: bound and gap too wide for the modulus");
  }
  const unsigned k = condition.modulus_bits;
  const BigInt modulus = pow2(k);
  const BigInt bound = pow2(condition.bound_bits);
  const BigInt threshold = modulus - pow2(condition.gap_bits);

  PowerCheck out;
  out.q_power = q_power;
  out.modulus_bits = k;

  const CFExpansion expansion = cf_expansion(multiplier, modulus);
  BigInt p_prev2 = 0, p_prev1 = 1;
  BigInt q_prev2 = 1, q_prev1 = 0;
  for (const BigInt& a : expansion.coefficients) {
    BigInt p = a * p_prev1 + p_prev2;
    BigInt q = a * q_prev1 + q_prev2;
    p_prev2 = std::move(p_prev1);
    p_prev1 = p;
    q_prev2 = std::move(q_prev1);
    q_prev1 = q;
    if (cmp(q, bound) >= 0) break;
    if (!out.denominators.empty() && q == out.denominators.back()) continue;

    BigInt r = residue(multiplier, q, k);
    ++out.convergents_examined;
    if (cmp(r, out.max_residue) > 0) out.max_residue = r;
    out.max_denominator = q;
    if (!out.witness && cmp(r, threshold) >= 0) {
      ResidueWitness wit;
      wit.q_power = q_power;
      wit.denom = q;
      wit.margin_gap = modulus - r;
      BigInt n = multiplier * q;
      n >>= k;
      n += 1;
      wit.gcd_d = gcd(q, n);
      wit.residue = std::move(r);
      out.witness = std::move(wit);
    }
    out.denominators.push_back(std::move(q));
  }
  return out;
}

PowerCheck check_power(const PowerEntry& entry, unsigned modulus_bits) {
  return check_power(from_uint128(entry.value), ResidueCondition{modulus_bits, 64, 64}, entry.q);
}

std::optional<SmallWitness> brute_force_check(std::uint64_t t, unsigned modulus_bits,
                                              unsigned bound_bits) {
  if (modulus_bits > 40 || bound_bits > 20 || bound_bits >= modulus_bits) {
    throw std::invalid_argument("brute_force_check: instance too large");
  }
  const std::uint64_t mask = (std::uint64_t{1} << modulus_bits) - 1;
  const std::uint64_t threshold = (std::uint64_t{1} << modulus_bits) - (std::uint64_t{1} << bound_bits);
  const std::uint64_t reduced = t & mask;
  const std::uint64_t bound = std::uint64_t{1} << bound_bits;
  for (std::uint64_t w = 1; w < bound; ++w) {
    const std::uint64_t r = (reduced * w) & mask;
    if (r >= threshold) return SmallWitness{w, r};
  }
  return std::nullopt;
}

RescaleIdentity rescale_by_gcd(const BigInt& a, const BigInt& w, unsigned modulus_bits) {
  if (sgn(a) <= 0 || sgn(w) <= 0) throw std::invalid_argument("rescale_by_gcd: a, w must be positive");
  const BigInt modulus = pow2(modulus_bits);
  const BigInt product = a * w;
  BigInt n = product;
  n >>= modulus_bits;
  n += 1;

  RescaleIdentity out;
  out.d = gcd(w, n);
  out.lhs = residue(a, w / out.d, modulus_bits);

  const BigInt shifted = residue(a, w, modulus_bits) - modulus;
  out.exact_division = mpz_divisible_p(shifted.get_mpz_t(), out.d.get_mpz_t()) != 0;
  BigInt quotient;
  mpz_tdiv_q(quotient.get_mpz_t(), shifted.get_mpz_t(), out.d.get_mpz_t());
  out.rhs = modulus + quotient;
  return out;
}

std::size_t VerificationReport::clear_count() const noexcept {
  std::size_t n = 0;
  for (const PowerCheck& c : per_power) n += c.clear() ? 1 : 0;
  return n;
}

VerificationReport verify_all(const PowerTable& table, Target target) {
  VerificationReport report;
  report.target = target;
  report.modulus_bits = modulus_bits(target);
  report.table_checksum = checksum(table);
  report.per_power.reserve(table.size());
  for (const PowerEntry& entry : table.entries()) {
    report.per_power.push_back(check_power(entry, report.modulus_bits));
  }
  report.all_clear = report.clear_count() == report.per_power.size();
  return report;
}

}  // namespace decbin
