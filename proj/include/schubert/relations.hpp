#pragma once

// Machine checks of the linear relations among Schubert and K-theoretic
// structure coefficients, the derivative identities behind them, and their
// corollaries.  Each check evaluates both sides independently and returns a
// report listing every contributing term.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "schubert/basis.hpp"

namespace schubert {

/// Anything a side of an identity can evaluate to.
using Value = std::variant<Integer, BetaPoly, IntPoly, BetaPolynomial>;

std::string to_string(const Value& v);
Value operator+(const Value& a, const Value& b);
Value operator*(const Integer& k, const Value& v);
/// Zero of the same ring as v.
Value zero_like(const Value& v);
bool is_zero(const Value& v);

struct ReportTerm {
  std::string label;
  Integer multiplier = 1;
  Value value;

  Value contribution() const { return multiplier * value; }
};

enum class Status { holds, fails, invalid_input };
std::string_view status_name(Status s);

/// How the two totals are compared.
enum class Comparison {
  equal,      // lhs == rhs
  congruent,  // lhs - rhs divisible by every listed modulus
  positive,   // lhs > rhs
};

struct RelationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ReportTerm> lhs;
  std::vector<ReportTerm> rhs;
  Value lhs_total = Integer(0);
  Value rhs_total = Integer(0);
  Comparison comparison = Comparison::equal;
  std::vector<Integer> moduli;
  Status status = Status::fails;
  std::vector<std::string> notes;
  /// Sub-identities; the report holds only if all of them do.
  std::vector<RelationReport> parts;

  bool holds() const { return status == Status::holds; }
};

/// Re-sums the listed terms and compares them against the stored totals.
bool totals_consistent(const RelationReport& r);

/// Upper end of the k-window for sums over s_k w > w: indices beyond
/// max(1, size(u), size(v), size(w)) contribute nothing.
int vanishing_window(const Permutation& u, const Permutation& v, const Permutation& w);

/// nabla S_w = sum over left descents k of k * S_{s_k w}.
RelationReport check_hpsw(Engine& engine, const Permutation& w);

/// sum i c^w_{s_i u, v} + sum j c^w_{u, s_j v} = sum k c^{s_k w}_{u,v}.
RelationReport check_main(Engine& engine, const Permutation& u, const Permutation& v,
                          const Permutation& w);

/// Some k has c^{s_k v}_{s_i, v} > 0.
RelationReport check_monk_like(Engine& engine, const Permutation& v, int i);

/// sum k c^{s_k w}_{u,v} is divisible by alpha (by 2 alpha when u = v),
/// provided every left descent of u and v is a multiple of alpha.
RelationReport check_residue(Engine& engine, const Permutation& u, const Permutation& v,
                             const Permutation& w, int alpha);

/// Coefficient-free variant of check_main with the extra term
/// c^{s_1 (1 x w)}_{1 x u, 1 x v}.
RelationReport check_stabilization(Engine& engine, const Permutation& u,
                                   const Permutation& v, const Permutation& w);

/// k! S_w(1) = sum over reduced words of the product of the letters.
RelationReport check_macdonald(Engine& engine, const Permutation& w);

/// The k-fold derivative relation.  Throws std::invalid_argument unless
/// 1 <= k <= l(u) + l(v) and l(w) = l(u) + l(v) - k.
RelationReport check_iterated(Engine& engine, const Permutation& u, const Permutation& v,
                              const Permutation& w, int k);

/// The w = s_i specialisation of check_iterated.  `rank` is the ambient n
/// (default max(size(u), size(v))); requires u, v nonidentity and
/// 1 <= i < n.
RelationReport check_kronecker(Engine& engine, const Permutation& u, const Permutation& v,
                               int i, int rank = 0);

/// No product term has a descent outside Des(u) and Des(v).
RelationReport check_dc_triviality(Engine& engine, const Permutation& u,
                                   const Permutation& v);

/// Both derivative identities for (beta-)Grothendieck polynomials, as two
/// parts of one report.
RelationReport check_psw(Engine& engine, const Permutation& w);

/// K-theoretic analogue of check_main, compared in Z[b].
RelationReport check_ktheory_main(Engine& engine, const Permutation& u,
                                  const Permutation& v, const Permutation& w);

/// check_ktheory_main with the b^2 d/db K^w_{u,v}(b) term that nabla^b
/// contributes when it hits the coefficients.  Since K^w_{u,v}(b) is a
/// multiple of b^(l(w) - l(u) - l(v)), the uncorrected form fails exactly
/// when that exponent is positive and the coefficient is nonzero.
RelationReport check_ktheory_corrected(Engine& engine, const Permutation& u,
                                       const Permutation& v, const Permutation& w);

/// G_w(1, ..., 1) = 1.
RelationReport check_g_ones(Engine& engine, const Permutation& w);

// ---------------------------------------------------------------------------
// Batch verification.

/// One input tuple for a named identity; unused fields stay at defaults.
struct Instance {
  std::string identity;
  Permutation u, v, w;
  int i = 0;
  int k = 0;
  int alpha = 0;
  int rank = 0;
};

/// The identity names accepted by run_instance, in catalog order.  The
/// corrected K-theory relation is listed last.
const std::vector<std::string>& identity_catalog();
bool is_known_identity(std::string_view name);

/// Every instance of `identity` over S_n, restricted to tuples for which
/// some term can be nonzero.  Canonically ordered.
std::vector<Instance> enumerate_instances(Engine& engine, std::string_view identity, int n);

RelationReport run_instance(Engine& engine, const Instance& instance);

/// w for which some term of check_main(u, v, w) is nonzero.
std::vector<Permutation> main_candidates(Engine& engine, const Permutation& u,
                                         const Permutation& v);

}  // namespace schubert
