#include "chiy/number_theory.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "chiy/error.hpp"

namespace chiy {

namespace {

void require_positive(long n, const char* what) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs a positive argument, got " + std::to_string(n));
}

long long checked_mul_sub(long long a, long long b, long long c) {
  // a - b * c, refusing silent overflow
  long long prod = 0;
  long long out = 0;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw Error(ErrorKind::InvalidArgument, "cyclotomic coefficient overflow");
  }
  return out;
}

// Exact quotient of num by a monic divisor; the remainder must vanish.
IntPolynomial divide_monic(const IntPolynomial& num, const IntPolynomial& den) {
  const std::size_t m = den.size() - 1;
  IntPolynomial rem = num;
  IntPolynomial quot(num.size() - m, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const long long q = rem[i + m];
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= m; ++j) rem[i + j] = checked_mul_sub(rem[i + j], q, den[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (rem[i] != 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic division left a remainder");
  }
  return quot;
}

class CyclotomicTable {
 public:
  const IntPolynomial& get(long k) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(k); it != table_.end()) return *it->second;
    }
    IntPolynomial poly(static_cast<std::size_t>(k) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(k)] = 1;
    for (long d : divisors(k)) {
      if (d == k) break;
      poly = divide_monic(poly, get(d));
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(k, std::make_unique<IntPolynomial>(std::move(poly)));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  // unique_ptr keeps returned references stable across rehash/insert
  std::map<long, std::unique_ptr<IntPolynomial>> table_;
};

}  // namespace

std::vector<long> divisors(long n) {
  require_positive(n, "divisors");
  std::vector<long> small;
  std::vector<long> large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(long n) {
  require_positive(n, "mobius");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

long euler_totient(long n) {
  require_positive(n, "euler_totient");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPolynomial& cyclotomic_coefficients(long k) {
  require_positive(k, "cyclotomic");
  static CyclotomicTable table;
  return table.get(k);
}

}  // namespace chiy
