#include "diskflow/combinat.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace diskflow {
namespace {

void require_even(int n, int min, const char* what) {
  if (n < min || n % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": n must be even and >= " +
                                std::to_string(min) + ", got " + std::to_string(n));
  }
}

// Catalan table grown on demand. C_m = C_(m-1) * 2(2m-1) / (m+1), the
// division is always exact.
class CatalanTable {
 public:
  BigInt get(int m) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(values_.size()) <= m) {
      const long k = static_cast<long>(values_.size());
      BigInt next = values_.back() * (2 * (2 * k - 1));
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
      values_.push_back(std::move(next));
    }
    return values_[static_cast<size_t>(m)];
  }

 private:
  std::mutex mu_;
  std::vector<BigInt> values_{BigInt(1)};
};

CatalanTable& catalan_table() {
  static CatalanTable table;
  return table;
}

BigInt pow3(int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return r;
}

BigInt binomial(int n, int k) {
  BigInt r;
  if (k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

BigInt catalan(int m) {
  if (m < 0) throw std::invalid_argument("catalan: m must be >= 0");
  return catalan_table().get(m);
}

BigInt alpha(int n) {
  require_even(n, 2, "alpha");
  return pow3(n / 2 - 1) * catalan(n / 2 - 1);
}

BigInt t_count(int n) {
  require_even(n, 2, "t_count");
  BigRational value(catalan(n / 2) + 2 * catalan(n / 2 - 1));
  const int e = n / 2 - 2;
  if (e >= 0) {
    value *= BigRational(pow3(e));
  } else {
    value /= BigRational(pow3(-e));
  }
  if (value.get_den() != 1) throw std::logic_error("t_count: non-integral result");
  return value.get_num();
}

BigInt catalan_triple_sum(int n) {
  if (n < 1) throw std::invalid_argument("catalan_triple_sum: n must be >= 1");
  BigInt sum;
  for (int i = 0; i <= n - 1; ++i) {
    for (int j = 0; i + j <= n - 1; ++j) {
      sum += catalan(i) * catalan(j) * catalan(n - 1 - i - j);
    }
  }
  return sum;
}

bool alpha_recurrence_check(int n) {
  require_even(n, 4, "alpha_recurrence_check");
  BigInt rhs;
  for (int k = 2; k <= n - 2; k += 2) rhs += alpha(k) * alpha(n - k);
  return alpha(n) == 3 * rhs;
}

bool t_recurrence_check(int n) {
  require_even(n, 4, "t_recurrence_check");
  BigInt rhs = alpha(n);
  for (int k = 2; k <= n - 2; k += 2) {
    for (int l = 2; k + l <= n; l += 2) {
      const int m = n + 2 - k - l;
      if (m < 2) continue;
      rhs += alpha(k) * alpha(l) * alpha(m);
    }
  }
  return t_count(n) == rhs;
}

BigInt a275607(int n) {
  if (n < 1) throw std::invalid_argument("a275607: n must be >= 1");
  BigRational value(2 * pow3(n) * (n + 1), BigInt(2L * n * n + n));
  value.canonicalize();
  value *= BigRational(binomial(2 * n + 1, n - 1));
  if (value.get_den() != 1) {
    throw std::logic_error("a275607: non-integral value at n=" + std::to_string(n));
  }
  return value.get_num();
}

std::vector<BigRational> series_coeffs(int K) {
  if (K < 0) throw std::invalid_argument("series_coeffs: K must be >= 0");
  // sqrt(1-12x) = sum c_k x^k, c_0 = 1, c_k = c_(k-1) * 12 (2k-3) / (2k).
  std::vector<BigRational> root(static_cast<size_t>(K) + 2);
  root[0] = 1;
  for (int k = 1; k <= K + 1; ++k) {
    BigRational ratio(12L * (2 * k - 3), 2L * k);
    ratio.canonicalize();
    root[static_cast<size_t>(k)] = root[static_cast<size_t>(k - 1)] * ratio;
  }
  // (1 - sqrt(1-12x)) / x has coefficients -c_(j+1).
  std::vector<BigRational> out(static_cast<size_t>(K) + 1);
  for (int j = 0; j <= K; ++j) {
    BigRational v = -root[static_cast<size_t>(j + 1)];
    if (j > 0) v += 6 * -root[static_cast<size_t>(j)];
    v /= 54;
    out[static_cast<size_t>(j)] = v;
  }
  return out;
}

}  // namespace diskflow
