#pragma once

// Prime sets and pi-part arithmetic.  A PrimeSet is a finite sorted set of
// primes pi; the complement pi' is implicit ("not in the set").

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pilift/error.hpp"

namespace pilift {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Trial-division factorization.  Orders in this library are small and smooth.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t to_u64(const mpz_class& n, const char* what = "value") {
  if (n < 0 || !n.fits_ulong_p())
    throw GuardError(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(n.get_ui());
}

inline std::vector<std::pair<std::uint64_t, int>> factorize(const mpz_class& n) {
  return factorize(to_u64(n, "factorization argument"));
}

inline std::vector<std::uint64_t> prime_divisors(const mpz_class& n) {
  std::vector<std::uint64_t> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

class PrimeSet {
 public:
  PrimeSet() = default;

  explicit PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (auto p : primes_)
      if (!is_prime(p)) throw InputError("PrimeSet: " + std::to_string(p) + " is not prime");
  }

  PrimeSet(std::initializer_list<std::uint64_t> primes)
      : PrimeSet(std::vector<std::uint64_t>(primes)) {}

  bool contains(std::uint64_t p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }

  bool empty() const { return primes_.empty(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  // True iff every prime factor of n lies in the set (so 1 is always a
  // pi-number, for any pi including the empty set).
  bool is_pi_number(const mpz_class& n) const {
    if (n <= 0) throw PreconditionError("is_pi_number: argument must be positive");
    for (auto& [p, e] : factorize(n))
      if (!contains(p)) return false;
    return true;
  }
  bool is_pi_number(std::uint64_t n) const { return is_pi_number(mpz_class(static_cast<unsigned long>(n))); }

  // Largest divisor of n all of whose prime factors lie in the set.
  mpz_class pi_part(const mpz_class& n) const {
    mpz_class part = 1;
    for (auto& [p, e] : factorize(n))
      if (contains(p))
        for (int i = 0; i < e; ++i) part *= static_cast<unsigned long>(p);
    return part;
  }

  mpz_class pi_prime_part(const mpz_class& n) const {
    mpz_class part;
    mpz_divexact(part.get_mpz_t(), n.get_mpz_t(), pi_part(n).get_mpz_t());
    return part;
  }

  std::uint64_t pi_part_u64(std::uint64_t n) const {
    return to_u64(pi_part(mpz_class(static_cast<unsigned long>(n))));
  }

  // The primes dividing `order` that are not in this set; used to turn pi'
  // into an explicit finite set relative to a group.
  PrimeSet complement_within(const mpz_class& order) const {
    std::vector<std::uint64_t> ps;
    for (auto p : prime_divisors(order))
      if (!contains(p)) ps.push_back(p);
    return PrimeSet(ps);
  }

  static PrimeSet primes_of(const mpz_class& order) { return PrimeSet(prime_divisors(order)); }

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i) os << ',';
      os << primes_[i];
    }
    os << '}';
    return os.str();
  }

  bool operator==(const PrimeSet& o) const { return primes_ == o.primes_; }
  bool operator<(const PrimeSet& o) const { return primes_ < o.primes_; }

 private:
  std::vector<std::uint64_t> primes_;
};

// Parses "2,3" or "{2,3}"; an empty string or "-" is the empty set.
inline PrimeSet parse_prime_set(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == '{' || c == '}' || c == ' '; }),
          s.end());
  std::vector<std::uint64_t> ps;
  if (s.empty() || s == "-") return PrimeSet(ps);
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    try {
      ps.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw InputError("cannot parse prime '" + tok + "'");
    }
  }
  return PrimeSet(ps);
}

}  // namespace pilift
