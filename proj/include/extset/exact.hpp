#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "extset/core.hpp"

namespace extset {
namespace exact {

using BigInt = boost::multiprecision::cpp_int;
/// Always held in lowest terms with a positive denominator.
using BigRat = boost::multiprecision::cpp_rational;

/// C(a,b), zero when b < 0, b > a or a < 0.
BigInt binom(long long a, long long b);

BigRat ratio(const BigInt& num, const BigInt& den);
BigRat pow(const BigRat& base, unsigned exponent);
BigInt floor(const BigRat& x);

/// "123" for integers, "p/q" otherwise.
std::string to_string(const BigRat& x);
std::string to_string(const BigInt& x);

/// Size bound for intersecting families of diversity at least C(n-u-1, n-k-1):
/// C(n-1,k-1) + C(n-u-1,n-k-1) - C(n-u-1,k-1). Integer u with 3 <= u <= k < n/2.
BigInt kz_bound(int n, int k, int u);

/// Same bound with real u, via log-gamma binomials. For plotting only.
double kz_bound_real(double n, double k, double u);

/// C(n-t-1,k-t-1) - C(n-t-k-1,k-t-1), the minimum t-degree of H_k.
/// Requires 1 <= t < k and n >= 2k+1.
BigInt hm_t_degree_bound(int n, int k, int t);

/// C(n-t,k-t) - C(n-s-t,k-t), the minimum t-degree of A0(n,k,s).
BigInt a0_t_degree(int n, int k, int s, int t);

struct EmcBound {
  BigRat value;
  BigInt floor;
};

/// C(n,k) - C(n-s,k) - (u-s-1)/u * C(n-s-k,k-1) where n = (u+s-1)(k-1)+s+k.
EmcBound emc_size_bound(int n, int k, int s, int u);

/// n determined by (s,k,u) for emc_size_bound.
int emc_ground_size(int k, int s, int u);

/// Number of sets containing 1 that meet [k+2,n] in at most t-1 elements,
/// summed in closed form over the size of their trace on [2,k+1].
BigInt alpha_closed_form(int n, int k, int t);

/// The same count taken directly over the members of `fam`.
long long alpha_count(const Family& fam, int t);

/// Outcome of one exact check: the compared quantities and the verdict.
struct CheckOutcome {
  bool holds = false;
  bool skipped = false;  // a zero denominator made the comparison meaningless
  BigRat lhs;
  BigRat rhs;
  std::string relation;  // "==", "<=", ">="
  std::string note;
};

/// C(n-1,k-1)-C(n-4,k-1)+C(n-4,k-3) = sum_{i=2..4} C(n-i,k-2) + C(n-4,k-3)
///   = C(n-2,k-2)+2C(n-3,k-2) = (1+2(n-k)/(n-2))C(n-2,k-2)
///   = k(k-1)(3n-2k-2)/(n(n-1)(n-2)) C(n,k).
CheckOutcome eq25_chain(int n, int k);
bool check_eq25(int n, int k);

/// C(n-u-1,n-k-1)/C(n-u-1,k-1) = prod_{i=k}^{n-k-1}(n-u-i)/(n-1-i)
///   <= prod_{i=k}^{n-k-1}(n-3-i)/(n-1-i) <= (k-1)(k-2)/((n-k-1)(n-k-2)).
CheckOutcome eq04_chain(int n, int k, int u);
bool check_eq04(int n, int k, int u);

/// C(n-t-k-1,k-t-1)/C(n-t-1,k-t-1) = prod_{i=1}^{k}(n-k+1-i)/(n-t-i).
CheckOutcome eq07_identity(int n, int k, int t);
bool check_eq07(int n, int k, int t);

/// prod_{i=1}^{k} (n-k+1-i)/(n-t-i).
BigRat hm_product(int n, int k, int t);

}  // namespace exact
}  // namespace extset
