#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crglab/element.hpp"

namespace crg::ll {

using cplx = std::complex<double>;
/// 0-based one-line permutation, p[i] = image of i.
using Perm = std::vector<int>;

/// Numerical failure: step underflow, non-convergence, singular Jacobian,
/// ambiguous deduplication.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double cluster = 1e-7;        // relative clustering radius for critical values
  double residual = 1e-10;      // relative |p'| residual at critical points
  double min_step = 1e-12;      // tracking step floor
  double max_step = 0.05;
  double dedup = 1e-6;          // relative coefficient distance for fiber members
  double polish = 1e-8;         // relative endpoint accuracy of lifts
  double regular_margin = 1e-4; // relative minimum value distance during lifts
};

/// p(z) = z^m + a_2 z^{m-2} + ... + a_m; coeffs[k - 2] holds a_k.
struct CenteredPolynomial {
  int degree = 2;
  std::vector<cplx> coeffs;

  CenteredPolynomial() = default;
  CenteredPolynomial(int m, std::vector<cplx> a);
  static CenteredPolynomial monomial(int m) { return {m, std::vector<cplx>(static_cast<std::size_t>(m - 1), 0.0)}; }

  cplx a(int k) const { return coeffs[static_cast<std::size_t>(k - 2)]; }
  cplx eval(cplx z) const;
  cplx derivative(cplx z) const;
  cplx second_derivative(cplx z) const;
  /// 1 + max |a_k|^{1/k}
  double scale() const;
  /// Monic coefficients of p(z) - t, highest degree first.
  std::vector<cplx> shifted(cplx t) const;
  std::string to_string() const;
};

struct CriticalValue {
  cplx value;
  int multiplicity = 1;
};
/// Critical values with multiplicity, sorted complex-lexicographically.
using Configuration = std::vector<CriticalValue>;

/// Complex-lexicographic order with an absolute tie tolerance on the real part.
bool lex_less(cplx a, cplx b, double tie = 1e-9);

/// Roots of p', polished by Newton; one entry per root with multiplicity.
std::vector<cplx> critical_points(const CenteredPolynomial& p, const Tolerances& tol = {});
Configuration critical_values(const CenteredPolynomial& p, const Tolerances& tol = {});

/// Tracks the roots of a monic family P_s, s in [0, 1], starting from the
/// given roots of P_0. family(s, out) writes the coefficients of P_s,
/// highest degree first. Returns the roots of P_1 in the order of `start`.
std::vector<cplx> track_roots(const std::function<void(double, std::vector<cplx>&)>& family, std::vector<cplx> start,
                              const Tolerances& tol = {});

/// Monodromy of the roots of z^m - exp(2 pi i s), s in [0, 1], starting at
/// the m-th roots of unity labelled in complex-lexicographic order; returned
/// as the label c = sigma^{-1}, where root i ends at root sigma(i).
Perm coxeter_loop(int m, const Tolerances& tol = {});

struct LabelledConfiguration {
  Configuration config;
  std::vector<Perm> labels;  // one per cluster, in configuration order
  cplx basepoint;
};

/// Monodromy labels of the clusters of critical values, read along a fixed
/// non-crossing loop system from a basepoint above all values. Root labels
/// at the basepoint are transported from the reference labelling of
/// coxeter_loop, so the labels multiply to coxeter_loop(m) exactly.
LabelledConfiguration rlbl(const CenteredPolynomial& p, const Tolerances& tol = {});

/// d v_j / d a_k = z_j^{m-k} at the critical points z_j, rows in the order
/// of `points`, columns k = 2..m.
std::vector<std::vector<cplx>> value_jacobian(const CenteredPolynomial& p, const std::vector<cplx>& points);

/// Continuation of p0 along a motion of its (distinct) critical values.
/// motion(tau) gives the target values at tau in [0, 1], matched by index to
/// critical_values(p0) at tau = 0.
CenteredPolynomial lift_path(const CenteredPolynomial& p0, const std::function<std::vector<cplx>(double)>& motion,
                             const Tolerances& tol = {});

/// Critical values paired with the critical points they come from, in
/// complex-lexicographic order of the values. Requires distinct values.
struct GenericData {
  std::vector<cplx> values;
  std::vector<cplx> points;
};
GenericData generic_data(const CenteredPolynomial& p, const Tolerances& tol = {});

/// Half-turn of the lex-adjacent values i, i + 1 (0-based) around their
/// midpoint, counterclockwise when ccw is true, along a thin ellipse that
/// encloses no other value.
std::function<std::vector<cplx>(double)> swap_motion(const std::vector<cplx>& values, std::size_t i, bool ccw);

CenteredPolynomial lift_swap(const CenteredPolynomial& p, std::size_t i, bool ccw, const Tolerances& tol = {});

struct FiberMember {
  CenteredPolynomial poly;
  std::vector<Perm> labels;
};

struct FiberReport {
  std::vector<FiberMember> members;
  bool injective = false;
  std::size_t lifts = 0;
};

/// Breadth-first exploration of LL^{-1}(LL(p0)) by lifting half-turn swaps
/// of adjacent values in both directions. Throws NumericError when two
/// members fall in the ambiguity band between dedup and 10 * dedup.
FiberReport explore_fiber(const CenteredPolynomial& p0, const Tolerances& tol = {});

/// Hurwitz move on permutation tuples (same convention as the group side).
std::vector<Perm> hurwitz_forward(const std::vector<Perm>& t, std::size_t i);

/// rlbl after lifting the counterclockwise half-turn sigma_i equals the
/// forward Hurwitz move applied to rlbl(p).
bool equivariance_check(const CenteredPolynomial& p, std::size_t i, const Tolerances& tol = {});

/// Seeded random polynomial with complex Gaussian coefficients whose
/// critical values are pairwise at least min_gap * scale apart.
CenteredPolynomial random_generic(int m, std::uint64_t seed, double min_gap = 0.05);

// Permutation helpers; product is function composition, (a * b)(i) = a(b(i)),
// matching the matrix product of permutation matrices.
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm perm_identity(int m);
int perm_cycles(const Perm& a);
/// Reflection length in S_m: m - number of cycles.
inline int perm_length(const Perm& a) { return static_cast<int>(a.size()) - perm_cycles(a); }
std::string perm_to_string(const Perm& a);
GroupElement to_element(const Perm& a);
Perm from_element(const GroupElement& w);

}  // namespace crg::ll
