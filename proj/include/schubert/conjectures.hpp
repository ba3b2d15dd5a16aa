#pragma once

// Exhaustive finite-rank tests of the multiplicity-freeness conjectures for
// products of inverse Grassmannian Schubert polynomials.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/basis.hpp"

namespace schubert {

enum class Conjecture { multfree, covers };

std::string_view conjecture_name(Conjecture c);
std::optional<Conjecture> parse_conjecture(std::string_view name);

/// Every w in S_n with exactly one left descent, in canonical order.
std::vector<Permutation> enumerate_inverse_grassmannian(int n);

struct Violation {
  Permutation u, v;        // the pair under test
  Permutation left, right; // the factors actually multiplied
  Permutation w;
  Integer coefficient;
  Expansion expansion;     // full expansion of S_left * S_right
  /// Whether c^{1 x w}_{1 x left, 1 x right} has the same value.
  bool persists = false;
};

/// Outcome of testing one pair.
struct PairResult {
  Permutation u, v;
  Integer max_coefficient = 0;
  std::size_t terms = 0;  // total support size over the products examined
  bool pieri = false;     // u or v has its left descent at 1
  std::vector<Violation> violations;
};

/// Expands S_u * S_v and flags coefficients above 1.  No precondition; used
/// directly for negative controls.
PairResult product_multiplicity(Engine& engine, const Permutation& u, const Permutation& v);

/// product_multiplicity restricted to inverse Grassmannian u, v.  Throws
/// std::invalid_argument otherwise.
PairResult check_multfree(Engine& engine, const Permutation& u, const Permutation& v);

/// With i, j the left descents of u, v: expands S_{s_i u} * S_v and
/// S_u * S_{s_j v} and flags coefficients above 1.  Throws
/// std::invalid_argument unless u, v are inverse Grassmannian.
PairResult check_covers(Engine& engine, const Permutation& u, const Permutation& v);

struct SweepReport {
  Conjecture conjecture = Conjecture::multfree;
  int n = 0;
  std::size_t candidates = 0;       // inverse Grassmannian elements of S_n
  std::size_t unordered_pairs = 0;  // pairs actually expanded
  std::size_t ordered_pairs = 0;    // pairs covered, counting (u,v) and (v,u)
  Integer max_coefficient = 0;
  std::size_t pieri_pairs = 0;
  std::vector<Violation> violations;
  double wall_seconds = 0;

  /// Number of ordered pairs expected from the candidate count.
  std::size_t predicted_ordered_pairs() const { return candidates * candidates; }
};

/// Runs the check over all unordered pairs {u, v} (u = v included) of
/// inverse Grassmannian elements of S_n on `jobs` threads.
SweepReport sweep(Engine& engine, Conjecture conjecture, int n, int jobs = 1);

}  // namespace schubert
