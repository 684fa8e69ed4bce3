#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace grouplab {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// A finite set of primes, kept sorted.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::uint64_t> ps) : primes_(ps) { normalize(); }
  explicit PrimeSet(std::vector<std::uint64_t> ps) : primes_(std::move(ps)) { normalize(); }

  // Exact prime divisors of n; empty for n = 1.
  static PrimeSet of(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) out.push_back(n);
    return PrimeSet(std::move(out));
  }

  bool contains(std::uint64_t p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  PrimeSet without(std::uint64_t p) const {
    std::vector<std::uint64_t> out;
    for (auto q : primes_) {
      if (q != p) out.push_back(q);
    }
    return PrimeSet(std::move(out));
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(primes_[i]);
    }
    return out + "}";
  }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  void normalize() {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  }

  std::vector<std::uint64_t> primes_;
};

// n is a pi-number when all its prime divisors lie in pi.  1 qualifies for
// every pi, the empty set included.
inline bool is_pi_number(std::uint64_t n, const PrimeSet& pi) {
  for (auto p : PrimeSet::of(n)) {
    if (!pi.contains(p)) return false;
  }
  return true;
}

// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi) {
  std::uint64_t r = 1;
  for (auto p : pi) r *= p_part(n, p);
  return r;
}

// The prime p when n = p^k with k >= 1.
inline std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  const PrimeSet ps = PrimeSet::of(n);
  if (ps.size() != 1) return std::nullopt;
  return ps.primes().front();
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace grouplab
