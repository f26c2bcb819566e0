#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rsf/nice_rational.hpp"
#include "rsf/omega.hpp"
#include "rsf/schur.hpp"

namespace rsf {

/// W = sum k(mu) W(mu) as a GL_d-module.
struct ModuleSpec {
  std::vector<std::pair<Partition, int>> summands;
  int d = 0;

  std::string to_string() const;
};

/// Weights alpha_j of a module, one exponent vector over x_1..x_d per basis vector.
using WeightList = std::vector<Monomial>;

/// Weitzenbock Jordan shape: cell sizes d_i + 1.
struct JordanShape {
  std::vector<int> cells;

  int total() const;
  std::string to_string() const;
};

enum class Group { SL, UT };

/// Exponent vectors of sum k(mu) S_mu(x_1..x_d), with multiplicity.
WeightList weights_of_module(const ModuleSpec& w);

/// prod_j 1/(1 - X^alpha_j), or prod_j 1/(1 - X^alpha_j t) when graded.
NiceRational hilbert_symmetric_algebra(const ModuleSpec& w, bool graded);

/// M'(v_1..v_d, t) at (0,..,0,1) for SL or (1,..,1) for UT.
NiceRational specialize_for_group(const NiceRational& m_prime, int d, Group g);

/// Hilbert series of K[W]^SL_d or K[W]^UT_d in t.
NiceRational invariants_hilbert(const ModuleSpec& w, Group g, const OmegaOptions& opt = {});

/// f_delta = 1/(q_{d_1} ... q_{d_k}) over x_1, x_2, t.
NiceRational weitzenbock_generating_function(const JordanShape& shape);

/// Hilbert series of the constants of the Weitzenbock derivation with this shape.
NiceRational weitzenbock_hilbert(const JordanShape& shape, const OmegaOptions& opt = {});

struct CyclotomicCheck {
  bool cyclotomic = false;
  /// The leftover factor could still be a product of Phi_n with n above the bound.
  bool bound_limited = false;
  int bound = 0;
};

/// Whether the numerator of a series in t is c * t^k * prod Phi_n with n <= bound.
/// A nonpositive bound selects 2 * deg + 4.
CyclotomicCheck cyclotomic_numerator_check(const NiceRational& f, int bound = 0);

/// H1 + H2 + ((x_1 + ... + x_d) - 1) H1 H2.
NiceRational tideal_product_hilbert(const NiceRational& h1, const NiceRational& h2, int d);

/// Names accepted by builtin_series.
const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);
/// Number of variables of a builtin at parameter d.
int builtin_arity(const std::string& name, int d);
/// Built-in series; `d` is used by polynomial-algebra and F-U2K.
NiceRational builtin_series(const std::string& name, int d = 0);

/// Substitutes x_j -> X^{w_j} t in a series over x_1..x_p, p = |weights|.
NiceRational substitute_weights(const NiceRational& hfp, const WeightList& weights, int d);

/// Hilbert series of F_p(R)^SL_d or F_p(R)^UT_d in t.
NiceRational noncommutative_invariants(const NiceRational& hfp, const WeightList& weights, int d, Group g,
                                       const OmegaOptions& opt = {});

/// Per-cell weights x_1^{d_i - j} x_2^j of a Jordan shape.
WeightList weitzenbock_weights(const JordanShape& shape);

/// Hilbert series of F(R)^delta in t for a series over x_1..x_d, d = shape total.
NiceRational noncommutative_weitzenbock(const NiceRational& hf, const JordanShape& shape,
                                        const OmegaOptions& opt = {});

}  // namespace rsf
