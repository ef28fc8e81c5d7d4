#include "extset/exact.hpp"

#include <cmath>

namespace extset::exact {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

BigRat q(long long num, long long den = 1) { return BigRat(BigInt(num), BigInt(den)); }

BigRat q(const BigInt& x) { return BigRat(x); }

double log_binom(double a, double b) {
  return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
}

double real_binom(double a, double b) {
  if (b < 0.0 || a < 0.0 || b > a) return 0.0;
  return std::exp(log_binom(a, b));
}

}  // namespace

BigInt binom(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  // Each partial product r * (a-b+i) / i equals C(a-b+i, i), so the division is exact.
  for (long long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

BigRat ratio(const BigInt& num, const BigInt& den) {
  require(den != 0, "ratio: zero denominator");
  return den < 0 ? BigRat(-num, -den) : BigRat(num, den);
}

BigRat pow(const BigRat& base, unsigned exponent) {
  BigRat result = 1;
  BigRat b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

BigInt floor(const BigRat& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const BigRat& x) {
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

BigInt kz_bound(int n, int k, int u) {
  require(k > 0 && n > 2 * k, "kz_bound: need n > 2k > 0");
  require(u >= 3 && u <= k, "kz_bound: need 3 <= u <= k");
  return binom(n - 1, k - 1) + binom(n - u - 1, n - k - 1) - binom(n - u - 1, k - 1);
}

double kz_bound_real(double n, double k, double u) {
  require(k > 0 && n > 2 * k, "kz_bound_real: need n > 2k > 0");
  require(u >= 3.0 && u <= k, "kz_bound_real: need 3 <= u <= k");
  return real_binom(n - 1, k - 1) + real_binom(n - u - 1, n - k - 1) - real_binom(n - u - 1, k - 1);
}

BigInt hm_t_degree_bound(int n, int k, int t) {
  require(t >= 1 && t < k, "hm_t_degree_bound: need 1 <= t < k");
  require(n >= 2 * k + 1, "hm_t_degree_bound: need n >= 2k + 1");
  return binom(n - t - 1, k - t - 1) - binom(n - t - k - 1, k - t - 1);
}

BigInt a0_t_degree(int n, int k, int s, int t) {
  require(t >= 1 && t <= k && k <= n, "a0_t_degree: need 1 <= t <= k <= n");
  require(s >= 1, "a0_t_degree: need s >= 1");
  return binom(n - t, k - t) - binom(n - s - t, k - t);
}

int emc_ground_size(int k, int s, int u) { return (u + s - 1) * (k - 1) + s + k; }

EmcBound emc_size_bound(int n, int k, int s, int u) {
  require(s >= 2 && k >= 2, "emc_size_bound: need s, k >= 2");
  require(u >= s + 1, "emc_size_bound: need u >= s + 1");
  require(n == emc_ground_size(k, s, u),
          "emc_size_bound: need n = (u+s-1)(k-1)+s+k = " + std::to_string(emc_ground_size(k, s, u)));
  EmcBound out;
  out.value = q(binom(n, k) - binom(n - s, k)) - q(u - s - 1, u) * q(binom(n - s - k, k - 1));
  out.floor = exact::floor(out.value);
  return out;
}

BigInt alpha_closed_form(int n, int k, int t) {
  require(t >= 1 && t < k, "alpha_closed_form: need 1 <= t < k");
  require(n >= k + 2, "alpha_closed_form: need n >= k + 2");
  BigInt sum = 0;
  for (int i = k - t; i <= k - 1; ++i) sum += binom(k, i) * binom(n - k - 1, k - i - 1);
  return sum;
}

long long alpha_count(const Family& fam, int t) {
  const int n = fam.n();
  const int k = fam.k();
  require(t >= 1 && t < k, "alpha_count: need 1 <= t < k");
  require(n >= k + 2, "alpha_count: need n >= k + 2");
  const Mask tail = low_bits(n) & ~low_bits(k + 1);  // [k+2, n]
  long long count = 0;
  for (Mask m : fam.masks()) {
    if ((m & element_bit(1)) != 0 && popcount(m & tail) <= t - 1) ++count;
  }
  return count;
}

CheckOutcome eq25_chain(int n, int k) {
  require(k >= 3, "eq25: need k >= 3");
  require(n >= k + 3, "eq25: need n >= k + 3");
  const BigRat first = q(binom(n - 1, k - 1) - binom(n - 4, k - 1) + binom(n - 4, k - 3));
  const BigRat pascal_sum = q(binom(n - 2, k - 2) + binom(n - 3, k - 2) + binom(n - 4, k - 2) + binom(n - 4, k - 3));
  const BigRat two_terms = q(binom(n - 2, k - 2) + 2 * binom(n - 3, k - 2));
  const BigRat factored = (q(1) + q(2LL * (n - k), n - 2)) * q(binom(n - 2, k - 2));
  const BigRat normalized = q(static_cast<long long>(k) * (k - 1) * (3LL * n - 2 * k - 2),
                              static_cast<long long>(n) * (n - 1) * (n - 2)) *
                            q(binom(n, k));
  CheckOutcome out;
  out.relation = "==";
  out.lhs = first;
  out.rhs = normalized;
  out.holds = first == pascal_sum && pascal_sum == two_terms && two_terms == factored && factored == normalized;
  if (!out.holds) out.note = "chain members disagree";
  return out;
}

bool check_eq25(int n, int k) { return eq25_chain(n, k).holds; }

CheckOutcome eq04_chain(int n, int k, int u) {
  require(n >= 2 * k + 2, "eq04: need n >= 2k + 2");
  require(u >= 3 && u <= k, "eq04: need 3 <= u <= k");
  CheckOutcome out;
  out.relation = "<=";
  out.rhs = q(static_cast<long long>(k - 1) * (k - 2), static_cast<long long>(n - k - 1) * (n - k - 2));
  const BigInt den = binom(n - u - 1, k - 1);
  if (den == 0) {
    out.skipped = true;
    out.holds = true;
    out.note = "C(n-u-1,k-1) = 0; ratio undefined";
    return out;
  }
  out.lhs = ratio(binom(n - u - 1, n - k - 1), den);
  BigRat prod_u = 1;
  BigRat prod_3 = 1;
  for (int i = k; i <= n - k - 1; ++i) {
    prod_u *= q(n - u - i, n - 1 - i);
    prod_3 *= q(n - 3 - i, n - 1 - i);
  }
  const bool identity = out.lhs == prod_u;
  out.holds = identity && prod_u <= prod_3 && prod_3 <= out.rhs;
  if (!identity) out.note = "ratio differs from its product form";
  return out;
}

bool check_eq04(int n, int k, int u) { return eq04_chain(n, k, u).holds; }

BigRat hm_product(int n, int k, int t) {
  BigRat p = 1;
  for (int i = 1; i <= k; ++i) {
    require(n - t - i != 0, "hm_product: zero denominator");
    p *= q(n - k + 1 - i, n - t - i);
  }
  return p;
}

CheckOutcome eq07_identity(int n, int k, int t) {
  require(t >= 1 && t < k, "eq07: need 1 <= t < k");
  require(n >= 2 * k + 1, "eq07: need n >= 2k + 1");
  CheckOutcome out;
  out.relation = "==";
  const BigInt den = binom(n - t - 1, k - t - 1);
  if (den == 0 || n - t - k <= 0) {
    out.skipped = true;
    out.holds = true;
    out.note = "zero denominator";
    return out;
  }
  out.lhs = ratio(binom(n - t - k - 1, k - t - 1), den);
  out.rhs = hm_product(n, k, t);
  out.holds = out.lhs == out.rhs;
  return out;
}

bool check_eq07(int n, int k, int t) { return eq07_identity(n, k, t).holds; }

}  // namespace extset::exact
