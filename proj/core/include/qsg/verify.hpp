#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsg/coalgebra.hpp"
#include "qsg/matrices.hpp"
#include "qsg/report.hpp"

namespace qsg {

/// Parameters of a verification run; everything here is echoed into the
/// report so runs are reproducible byte for byte.
struct SuiteConfig {
  long window = 0;  // 0 = per-instance default
  std::uint64_t seed = 1;
  long samples = 0;  // 0 = suite default
  long symbol_grid = 4096;
};

/// Truncated-matrix check of an element product: matrix(x)*matrix(y) must
/// equal matrix(mul(x,y)) on the safe-core columns.
CaseResult verify_element_product(const Semigroup& s, const Element& x,
                                  const Element& y, const Window& win,
                                  std::string id = "product");

/// The composed generator matrices of w against the single normal-form
/// monomial matrix of T_w, exact on safe-core columns.
CaseResult verify_eq7(const Semigroup& s, const Word& w, const Window& win,
                      std::string id = "eq7");

/// W_d on l2(S x S) restricted to win x win: row (a,b) carries a single 1
/// in column (a, d a^{-1} b) whenever that point lies in S and the window.
RatMatrix build_wd(const Semigroup& s, const GroupElem& d, const Window& win);

/// W_d W_d^* = I_d and W_d^* W_d = I'_d on their safe cores.
CaseResult verify_wd_isometry(const Semigroup& s, const GroupElem& d,
                              const Window& win, std::string id = "wd");

/// Delta(T_c) W_d = W_d (T_c x 1) and the T_c^* analogue, exact on
/// safe-core columns of win x win.
CaseResult verify_intertwining(const Semigroup& s, const GroupElem& c,
                               const GroupElem& d, const Window& win,
                               std::string id = "intertwining");

/// Columns of Delta(T_c) W_d lie in the range of W_d.
CaseResult verify_wd_range(const Semigroup& s, const GroupElem& c,
                           const GroupElem& d, const Window& win,
                           std::string id = "wd_range");

/// Some d in S with d a^{-1} b in S for every (a,b) in K; returns the
/// product of all first components, verified before returning.
GroupElem find_d_for_finite_set(
    const Semigroup& s,
    const std::vector<std::pair<GroupElem, GroupElem>>& k);

struct QuotientNormCase {
  double sigma = 0.0;  // symbol sup norm of the quotient image
  double nu = 0.0;     // truncated operator norm
  CaseResult result;
};

/// Computes sigma = symbol_sup_norm(quotient(x)) and nu_N =
/// operator_norm(matrix(x, N)); flags failure when sigma > nu_N * (1+tol).
/// Instances with G = Z only (rank-1 lattice or numerical).
QuotientNormCase quotient_norm_check(const Semigroup& s, const Element& x,
                                     long window_n, long grid,
                                     std::string id = "quotient",
                                     double tol = 0.05);

/// Substitution unitary W xi(x,y) = xi(x, xy) on a cyclic grid surrogate of
/// G = Z: permutation property, W (L x L)(g) W^* = (L x 1)(g), and
/// invariance of first-leg indicator diagonals.
Report verify_cros_unitary(long grid_m, long samples, std::uint64_t seed);

Report run_ideal_lemmas_suite(const Semigroup& s, const SuiteConfig& cfg);
Report run_eq7_suite(const Semigroup& s, const SuiteConfig& cfg);
Report run_products_suite(const Semigroup& s, const SuiteConfig& cfg);
Report run_relations_suite(const Semigroup& s, const SuiteConfig& cfg);
Report run_wd_suite(const Semigroup& s, const SuiteConfig& cfg);
Report run_quotient_suite(const Semigroup& s, const SuiteConfig& cfg);
Report run_cros_suite(const Semigroup& s, const SuiteConfig& cfg);
Report run_independence_suite(const Semigroup& s, const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();
Report run_suite(const Semigroup& s, const std::string& name,
                 const SuiteConfig& cfg);

/// Per-instance default used when SuiteConfig leaves the window at 0.
long default_window(const Semigroup& s, const std::string& suite);

}  // namespace qsg
