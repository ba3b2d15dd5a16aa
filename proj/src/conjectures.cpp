#include "schubert/conjectures.hpp"

#include <chrono>
#include <stdexcept>

#include "schubert/parallel.hpp"

namespace schubert {

std::string_view conjecture_name(Conjecture c) {
  return c == Conjecture::multfree ? "multfree" : "covers";
}

std::optional<Conjecture> parse_conjecture(std::string_view name) {
  if (name == "multfree") return Conjecture::multfree;
  if (name == "covers") return Conjecture::covers;
  return std::nullopt;
}

std::vector<Permutation> enumerate_inverse_grassmannian(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_inverse_grassmannian requires n >= 2");
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (is_inverse_grassmannian(w)) out.push_back(std::move(w));
  return out;
}

namespace {

void require_inverse_grassmannian(const Permutation& u, const Permutation& v) {
  if (!is_inverse_grassmannian(u) || !is_inverse_grassmannian(v))
    throw std::invalid_argument("u and v must each have exactly one left descent");
}

bool is_pieri(const Permutation& u, const Permutation& v) {
  return (is_inverse_grassmannian(u) && u.left_descents().front() == 1) ||
         (is_inverse_grassmannian(v) && v.left_descents().front() == 1);
}

// Scans S_left * S_right into result.
void scan(Engine& engine, PairResult& result, const Permutation& left,
          const Permutation& right) {
  const Expansion e = engine.product_by_value(left, right);
  result.terms += e.size();
  for (const auto& [w, c] : e.terms) {
    if (c > result.max_coefficient) result.max_coefficient = c;
    if (c <= 1) continue;
    Violation bad{result.u, result.v, left, right, w, c, e};
    bad.persists =
        engine.product_by_value(one_times(left), one_times(right)).coefficient(one_times(w)) == c;
    result.violations.push_back(std::move(bad));
  }
}

}  // namespace

PairResult product_multiplicity(Engine& engine, const Permutation& u, const Permutation& v) {
  PairResult r;
  r.u = u;
  r.v = v;
  r.pieri = is_pieri(u, v);
  scan(engine, r, u, v);
  return r;
}

PairResult check_multfree(Engine& engine, const Permutation& u, const Permutation& v) {
  require_inverse_grassmannian(u, v);
  return product_multiplicity(engine, u, v);
}

PairResult check_covers(Engine& engine, const Permutation& u, const Permutation& v) {
  require_inverse_grassmannian(u, v);
  PairResult r;
  r.u = u;
  r.v = v;
  r.pieri = is_pieri(u, v);
  scan(engine, r, left_s(u.left_descents().front(), u), v);
  scan(engine, r, u, left_s(v.left_descents().front(), v));
  return r;
}

SweepReport sweep(Engine& engine, Conjecture conjecture, int n, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.conjecture = conjecture;
  report.n = n;
  const auto candidates = enumerate_inverse_grassmannian(n);
  report.candidates = candidates.size();

  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (std::size_t a = 0; a < candidates.size(); ++a)
    for (std::size_t b = a; b < candidates.size(); ++b)
      pairs.emplace_back(candidates[a], candidates[b]);

  auto results = parallel_map(pairs, jobs, [&](const auto& p) {
    return conjecture == Conjecture::multfree ? check_multfree(engine, p.first, p.second)
                                              : check_covers(engine, p.first, p.second);
  });

  for (auto& r : results) {
    ++report.unordered_pairs;
    report.ordered_pairs += r.u == r.v ? 1 : 2;
    if (r.max_coefficient > report.max_coefficient) report.max_coefficient = r.max_coefficient;
    if (r.pieri) ++report.pieri_pairs;
    for (auto& bad : r.violations) report.violations.push_back(std::move(bad));
  }
  if (report.ordered_pairs != report.predicted_ordered_pairs())
    throw std::logic_error("sweep covered " + std::to_string(report.ordered_pairs) +
                           " ordered pairs, expected " +
                           std::to_string(report.predicted_ordered_pairs()));
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace schubert
