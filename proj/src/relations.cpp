#include "schubert/relations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "schubert/polynomial_text.hpp"

namespace schubert {

// ---------------------------------------------------------------------------
// Values

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return schubert::to_string(x); }, v);
}

Value operator+(const Value& a, const Value& b) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        const T* y = std::get_if<T>(&b);
        if (y == nullptr) throw std::logic_error("adding values from different rings");
        return x + *y;
      },
      a);
}

Value operator*(const Integer& k, const Value& v) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return k * x;
        } else if constexpr (std::is_same_v<T, BetaPoly>) {
          return BetaPoly(k) * x;
        } else if constexpr (std::is_same_v<T, IntPoly>) {
          return x * k;
        } else {
          return x * BetaPoly(k);
        }
      },
      v);
}

Value zero_like(const Value& v) {
  return std::visit([](const auto& x) -> Value { return std::decay_t<decltype(x)>(); }, v);
}

bool is_zero(const Value& v) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, BetaPoly>)
          return schubert::is_zero(x);
        else
          return x.is_zero();
      },
      v);
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::fails:
      return "fails";
    case Status::invalid_input:
      return "invalid-input";
  }
  return "?";
}

namespace {

Value sum_terms(const std::vector<ReportTerm>& terms, const Value& zero) {
  Value total = zero;
  for (const auto& t : terms) total = total + t.contribution();
  return total;
}

bool compare_totals(const RelationReport& r) {
  switch (r.comparison) {
    case Comparison::equal:
      return r.lhs_total == r.rhs_total;
    case Comparison::congruent: {
      const Integer diff = std::get<Integer>(r.lhs_total) - std::get<Integer>(r.rhs_total);
      return std::all_of(r.moduli.begin(), r.moduli.end(),
                         [&](const Integer& m) { return diff % m == 0; });
    }
    case Comparison::positive:
      return std::get<Integer>(r.lhs_total) > std::get<Integer>(r.rhs_total);
  }
  return false;
}

// Fills in totals and status.  A status already set to fails (by a probe)
// or invalid_input is kept.
void finalize(RelationReport& r, const Value& zero) {
  r.lhs_total = sum_terms(r.lhs, zero);
  r.rhs_total = sum_terms(r.rhs, zero);
  if (r.status == Status::invalid_input) return;
  const bool probe_failed = std::any_of(r.notes.begin(), r.notes.end(), [](const auto& n) {
    return n.rfind("probe failed", 0) == 0;
  });
  bool ok = !probe_failed && compare_totals(r);
  for (const auto& part : r.parts) ok = ok && part.holds();
  r.status = ok ? Status::holds : Status::fails;
}

std::string perm(const Permutation& w) { return w.to_string(); }

std::string coeff_label(const Permutation& u, const Permutation& v, const Permutation& w) {
  return "c(" + perm(u) + "," + perm(v) + ";" + perm(w) + ")";
}

std::string k_label(const Permutation& u, const Permutation& v, const Permutation& w) {
  return "K(" + perm(u) + "," + perm(v) + ";" + perm(w) + ")";
}

Integer at_ones(Engine& engine, const Permutation& w) {
  return specialize_ones(engine.schubert(w));
}

// Sum over k <= window with s_k w > w of k * coefficient(s_k w), plus the
// probe at window + 1 recorded in the notes.
template <typename Coeff>
void ascent_sum(RelationReport& r, std::vector<ReportTerm>& side, const Permutation& w,
                int window, bool weighted, Coeff&& coefficient,
                const std::string& symbol, const Permutation& u, const Permutation& v) {
  for (int k = 1; k <= window; ++k) {
    if (w.has_left_descent(k)) continue;
    const Permutation up = left_s(k, w);
    side.push_back({"k=" + std::to_string(k) + ": " + symbol + "(" + perm(u) + "," +
                        perm(v) + ";" + perm(up) + ")",
                    weighted ? Integer(k) : Integer(1), coefficient(up)});
  }
  const int probe = window + 1;
  Value beyond = coefficient(left_s(probe, w));
  if (is_zero(beyond))
    r.notes.push_back("probe k=" + std::to_string(probe) + ": 0");
  else
    r.notes.push_back("probe failed at k=" + std::to_string(probe) + ": " + to_string(beyond));
}

Permutation shift_down(const Permutation& q) {
  // Inverse of one_times on permutations fixing 1.
  std::vector<int> word;
  for (int k = 2; k <= q.size(); ++k) word.push_back(q(k) - 1);
  return Permutation::from_one_line(word);
}

// {x <=_L p : l(x) = l(p) - steps}.
std::set<Permutation> left_lower_set(const Permutation& p, int steps) {
  std::set<Permutation> frontier{p};
  for (int s = 0; s < steps; ++s) {
    std::set<Permutation> next;
    for (const auto& x : frontier)
      for (int i : x.left_descents()) next.insert(left_s(i, x));
    frontier = std::move(next);
  }
  return frontier;
}

void add_support(std::set<Permutation>& out, const Expansion& e) {
  for (const auto& [w, c] : e.terms) out.insert(w);
}

}  // namespace

bool totals_consistent(const RelationReport& r) {
  if (!r.lhs.empty() || !r.rhs.empty()) {
    if (sum_terms(r.lhs, zero_like(r.lhs_total)) != r.lhs_total) return false;
    if (sum_terms(r.rhs, zero_like(r.rhs_total)) != r.rhs_total) return false;
  }
  return std::all_of(r.parts.begin(), r.parts.end(), totals_consistent);
}

int vanishing_window(const Permutation& u, const Permutation& v, const Permutation& w) {
  return std::max({1, u.size(), v.size(), w.size()});
}

// ---------------------------------------------------------------------------
// Cohomology

RelationReport check_hpsw(Engine& engine, const Permutation& w) {
  RelationReport r;
  r.identity = "hpsw";
  r.inputs = {{"w", perm(w)}};
  r.lhs.push_back({"nabla S_" + perm(w), 1, nabla(engine.schubert(w))});
  for (int k : w.left_descents()) {
    const Permutation down = left_s(k, w);
    r.rhs.push_back({"k=" + std::to_string(k) + ": S_" + perm(down), k, engine.schubert(down)});
  }
  finalize(r, IntPoly());
  return r;
}

RelationReport check_main(Engine& engine, const Permutation& u, const Permutation& v,
                          const Permutation& w) {
  RelationReport r;
  r.identity = "main";
  r.inputs = {{"u", perm(u)}, {"v", perm(v)}, {"w", perm(w)}};
  for (int i : u.left_descents()) {
    const Permutation su = left_s(i, u);
    r.lhs.push_back({"i=" + std::to_string(i) + ": " + coeff_label(su, v, w), i,
                     engine.structure_coeff(su, v, w)});
  }
  for (int j : v.left_descents()) {
    const Permutation sv = left_s(j, v);
    r.lhs.push_back({"j=" + std::to_string(j) + ": " + coeff_label(u, sv, w), j,
                     engine.structure_coeff(u, sv, w)});
  }
  ascent_sum(
      r, r.rhs, w, vanishing_window(u, v, w), true,
      [&](const Permutation& p) -> Value { return engine.structure_coeff(u, v, p); }, "c", u,
      v);
  finalize(r, Integer(0));
  return r;
}

RelationReport check_monk_like(Engine& engine, const Permutation& v, int i) {
  if (i < 1) throw std::invalid_argument("check_monk_like requires i >= 1");
  RelationReport r;
  r.identity = "monk";
  r.inputs = {{"v", perm(v)}, {"i", std::to_string(i)}};
  r.comparison = Comparison::positive;
  const Permutation si = Permutation::simple(i);
  ascent_sum(
      r, r.lhs, v, vanishing_window(si, v, v), false,
      [&](const Permutation& p) -> Value { return engine.structure_coeff(si, v, p); }, "c",
      si, v);
  std::string positive;
  for (const auto& t : r.lhs)
    if (!is_zero(t.value)) positive += (positive.empty() ? "" : ",") + t.label.substr(2, t.label.find(':') - 2);
  r.notes.push_back("positive at k in {" + positive + "}");
  finalize(r, Integer(0));
  return r;
}

RelationReport check_residue(Engine& engine, const Permutation& u, const Permutation& v,
                             const Permutation& w, int alpha) {
  RelationReport r;
  r.identity = "residue";
  r.inputs = {{"u", perm(u)}, {"v", perm(v)}, {"w", perm(w)}, {"alpha", std::to_string(alpha)}};
  r.comparison = Comparison::congruent;
  auto divisible = [alpha](const Permutation& x) {
    const auto d = x.left_descents();
    return std::all_of(d.begin(), d.end(), [alpha](int i) { return i % alpha == 0; });
  };
  if (alpha < 1 || !divisible(u) || !divisible(v)) {
    r.status = Status::invalid_input;
    r.notes.push_back("precondition: every left descent of u and v must be a multiple of alpha");
    finalize(r, Integer(0));
    return r;
  }
  r.moduli.push_back(alpha);
  if (u == v) r.moduli.push_back(2 * alpha);
  ascent_sum(
      r, r.lhs, w, vanishing_window(u, v, w), true,
      [&](const Permutation& p) -> Value { return engine.structure_coeff(u, v, p); }, "c", u,
      v);
  finalize(r, Integer(0));
  return r;
}

RelationReport check_stabilization(Engine& engine, const Permutation& u,
                                   const Permutation& v, const Permutation& w) {
  RelationReport r;
  r.identity = "stabilization";
  r.inputs = {{"u", perm(u)}, {"v", perm(v)}, {"w", perm(w)}};
  for (int i : u.left_descents()) {
    const Permutation su = left_s(i, u);
    r.lhs.push_back({"i=" + std::to_string(i) + ": " + coeff_label(su, v, w), 1,
                     engine.structure_coeff(su, v, w)});
  }
  for (int j : v.left_descents()) {
    const Permutation sv = left_s(j, v);
    r.lhs.push_back({"j=" + std::to_string(j) + ": " + coeff_label(u, sv, w), 1,
                     engine.structure_coeff(u, sv, w)});
  }
  const Permutation su1 = one_times(u);
  const Permutation sv1 = one_times(v);
  const Permutation target = left_s(1, one_times(w));
  const Integer extra = engine.structure_coeff(su1, sv1, target);
  r.rhs.push_back({"extra: " + coeff_label(su1, sv1, target), 1, extra});
  if (extra != 0) r.notes.push_back("extra term nonzero: " + extra.str());
  ascent_sum(
      r, r.rhs, w, vanishing_window(u, v, w), false,
      [&](const Permutation& p) -> Value { return engine.structure_coeff(u, v, p); }, "c", u,
      v);
  finalize(r, Integer(0));
  return r;
}

RelationReport check_macdonald(Engine& engine, const Permutation& w) {
  RelationReport r;
  r.identity = "macdonald";
  r.inputs = {{"w", perm(w)}};
  const int k = w.length();
  Integer factorial = 1;
  for (int m = 2; m <= k; ++m) factorial *= m;
  r.lhs.push_back({std::to_string(k) + "! * S_" + perm(w) + "(1)", factorial,
                   at_ones(engine, w)});
  for (const auto& word : reduced_words(w)) {
    Integer product = 1;
    std::string label = "(";
    for (std::size_t m = 0; m < word.size(); ++m) {
      product *= word[m];
      label += (m ? "," : "") + std::to_string(word[m]);
    }
    r.rhs.push_back({label + ")", product, Integer(1)});
  }
  finalize(r, Integer(0));
  return r;
}

RelationReport check_iterated(Engine& engine, const Permutation& u, const Permutation& v,
                              const Permutation& w, int k) {
  const int lu = u.length();
  const int lv = v.length();
  if (k < 1 || k > lu + lv)
    throw std::invalid_argument("check_iterated requires 1 <= k <= l(u) + l(v)");
  if (w.length() != lu + lv - k)
    throw std::invalid_argument("check_iterated requires l(w) = l(u) + l(v) - k");
  RelationReport r;
  r.identity = "iterated";
  r.inputs = {{"u", perm(u)}, {"v", perm(v)}, {"w", perm(w)}, {"k", std::to_string(k)}};
  const Permutation w_inv = w.inverse();
  for (const auto& [top, c] : engine.product_expansion(u, v).terms) {
    if (!left_weak_leq(w, top)) continue;
    const Permutation quotient = top * w_inv;
    r.lhs.push_back({coeff_label(u, v, top) + " * S_" + perm(quotient) + "(1)",
                     at_ones(engine, quotient), c});
  }
  const auto u_group = all_permutations(u.size());
  const auto v_group = all_permutations(v.size());
  for (int i = 0; i <= k; ++i) {
    for (const auto& uh : u_group) {
      if (uh.length() != lu - i || !left_weak_leq(uh, u)) continue;
      const Permutation uq = u * uh.inverse();
      for (const auto& vh : v_group) {
        if (vh.length() != lv - (k - i) || !left_weak_leq(vh, v)) continue;
        const Permutation vq = v * vh.inverse();
        r.rhs.push_back({"i=" + std::to_string(i) + ": " + coeff_label(uh, vh, w) + " * S_" +
                             perm(uq) + "(1) * S_" + perm(vq) + "(1)",
                         at_ones(engine, uq) * at_ones(engine, vq),
                         engine.structure_coeff(uh, vh, w)});
      }
    }
  }
  finalize(r, Integer(0));
  return r;
}

RelationReport check_kronecker(Engine& engine, const Permutation& u, const Permutation& v,
                               int i, int rank) {
  if (u.is_identity() || v.is_identity())
    throw std::invalid_argument("check_kronecker requires nonidentity u and v");
  const int n = rank > 0 ? rank : std::max(u.size(), v.size());
  if (n < std::max(u.size(), v.size()))
    throw std::invalid_argument("check_kronecker: u and v must lie in S_rank");
  if (i < 1 || i >= n) throw std::invalid_argument("check_kronecker requires 1 <= i < rank");
  RelationReport r;
  r.identity = "kronecker";
  r.inputs = {{"u", perm(u)}, {"v", perm(v)}, {"i", std::to_string(i)},
              {"rank", std::to_string(n)}};
  for (const auto& [p, c] : engine.product_expansion(u, v).terms) {
    if (!p.has_descent(i)) continue;
    const Permutation ps = right_s(p, i);
    r.lhs.push_back({coeff_label(u, v, p) + " * S_" + perm(ps) + "(1)", at_ones(engine, ps), c});
  }
  const Integer dv = v.has_descent(i) ? 1 : 0;
  const Integer du = u.has_descent(i) ? 1 : 0;
  const Integer rv = dv == 0 ? Integer(0) : at_ones(engine, u) * at_ones(engine, right_s(v, i));
  const Integer ru = du == 0 ? Integer(0) : at_ones(engine, right_s(u, i)) * at_ones(engine, v);
  r.rhs.push_back({"delta(v,i) * S_u(1) * S_{v s_i}(1)", rv, dv});
  r.rhs.push_back({"delta(u,i) * S_{u s_i}(1) * S_v(1)", ru, du});
  finalize(r, Integer(0));
  return r;
}

RelationReport check_dc_triviality(Engine& engine, const Permutation& u,
                                   const Permutation& v) {
  RelationReport r;
  r.identity = "dc";
  r.inputs = {{"u", perm(u)}, {"v", perm(v)}};
  const Expansion& product = engine.product_expansion(u, v);
  int top = std::max(u.size(), v.size());
  for (const auto& [p, c] : product.terms) top = std::max(top, p.size());
  std::string checked;
  for (int i = 1; i < top; ++i) {
    if (u.has_descent(i) || v.has_descent(i)) continue;
    checked += (checked.empty() ? "" : ",") + std::to_string(i);
    for (const auto& [p, c] : product.terms)
      if (p.has_descent(i))
        r.lhs.push_back({"i=" + std::to_string(i) + ": " + coeff_label(u, v, p), 1, c});
  }
  r.notes.push_back("indices outside Des(u) and Des(v): {" + checked + "}");
  finalize(r, Integer(0));
  return r;
}

// ---------------------------------------------------------------------------
// K-theory

RelationReport check_psw(Engine& engine, const Permutation& w) {
  const Permutation w_inv = w.inverse();
  const int maj_inv = maj(w_inv);
  const int inv = w.length();

  RelationReport beta_part;
  beta_part.identity = "psw-beta";
  beta_part.inputs = {{"w", perm(w)}};
  const BetaPolynomial& gb = engine.beta_grothendieck(w);
  beta_part.lhs.push_back({"nabla^b G^b_" + perm(w), 1, nabla_beta(gb)});
  beta_part.rhs.push_back({"b*(maj(w^-1) - inv(w)) * G^b_" + perm(w), maj_inv - inv,
                           gb * BetaPoly::beta()});
  for (int k : w.left_descents()) {
    const Permutation down = left_s(k, w);
    beta_part.rhs.push_back(
        {"k=" + std::to_string(k) + ": G^b_" + perm(down), k, engine.beta_grothendieck(down)});
  }
  finalize(beta_part, BetaPolynomial());

  RelationReport k_part;
  k_part.identity = "psw-k";
  k_part.inputs = {{"w", perm(w)}};
  const IntPoly& g = engine.grothendieck(w);
  k_part.lhs.push_back({"maj(w^-1) * G_" + perm(w), maj_inv, g});
  k_part.lhs.push_back({"nabla G_" + perm(w), 1, nabla(g)});
  k_part.lhs.push_back({"-E G_" + perm(w), -1, euler(g)});
  for (int k : w.left_descents()) {
    const Permutation down = left_s(k, w);
    k_part.rhs.push_back({"k=" + std::to_string(k) + ": G_" + perm(down), k,
                          engine.grothendieck(down)});
  }
  finalize(k_part, IntPoly());

  RelationReport r;
  r.identity = "psw";
  r.inputs = {{"w", perm(w)}};
  r.parts = {std::move(beta_part), std::move(k_part)};
  finalize(r, Integer(0));
  return r;
}

namespace {

RelationReport ktheory_report(Engine& engine, const Permutation& u, const Permutation& v,
                              const Permutation& w, bool with_beta_derivative) {
  RelationReport r;
  r.identity = with_beta_derivative ? "ktheory-corrected" : "ktheory";
  r.inputs = {{"u", perm(u)}, {"v", perm(v)}, {"w", perm(w)}};
  const int prefactor = maj(u.inverse()) + maj(v.inverse()) - maj(w.inverse()) - u.length() -
                        v.length() + w.length();
  const BetaPoly k_uvw = engine.k_coeff_beta(u, v, w);
  r.lhs.push_back({"b * " + k_label(u, v, w) + " * (maj/length prefactor)", prefactor,
                   BetaPoly::beta() * k_uvw});
  if (with_beta_derivative)
    r.lhs.push_back({"-b^2 d/db " + k_label(u, v, w), -1,
                     BetaPoly::beta() * BetaPoly::beta() * k_uvw.derivative()});
  for (int i : u.left_descents()) {
    const Permutation su = left_s(i, u);
    r.lhs.push_back({"i=" + std::to_string(i) + ": " + k_label(su, v, w), i,
                     engine.k_coeff_beta(su, v, w)});
  }
  for (int j : v.left_descents()) {
    const Permutation sv = left_s(j, v);
    r.lhs.push_back({"j=" + std::to_string(j) + ": " + k_label(u, sv, w), j,
                     engine.k_coeff_beta(u, sv, w)});
  }
  ascent_sum(
      r, r.rhs, w, vanishing_window(u, v, w), true,
      [&](const Permutation& p) -> Value { return engine.k_coeff_beta(u, v, p); }, "K", u, v);
  finalize(r, BetaPoly());
  return r;
}

}  // namespace

RelationReport check_ktheory_main(Engine& engine, const Permutation& u,
                                  const Permutation& v, const Permutation& w) {
  return ktheory_report(engine, u, v, w, false);
}

RelationReport check_ktheory_corrected(Engine& engine, const Permutation& u,
                                       const Permutation& v, const Permutation& w) {
  return ktheory_report(engine, u, v, w, true);
}

RelationReport check_g_ones(Engine& engine, const Permutation& w) {
  RelationReport r;
  r.identity = "g-ones";
  r.inputs = {{"w", perm(w)}};
  r.lhs.push_back({"G_" + perm(w) + "(1,...,1)", 1, specialize_ones(engine.grothendieck(w))});
  r.rhs.push_back({"1", 1, Integer(1)});
  finalize(r, Integer(0));
  return r;
}

// ---------------------------------------------------------------------------
// Batch verification

const std::vector<std::string>& identity_catalog() {
  static const std::vector<std::string> names = {
      "hpsw",     "main",      "monk", "residue", "stabilization", "macdonald",
      "iterated", "kronecker", "dc",   "psw",     "ktheory",       "g-ones",
      "ktheory-corrected"};
  return names;
}

bool is_known_identity(std::string_view name) {
  const auto& names = identity_catalog();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Permutation> main_candidates(Engine& engine, const Permutation& u,
                                         const Permutation& v) {
  std::set<Permutation> out;
  for (int i : u.left_descents()) add_support(out, engine.product_expansion(left_s(i, u), v));
  for (int j : v.left_descents()) add_support(out, engine.product_expansion(u, left_s(j, v)));
  for (const auto& [p, c] : engine.product_expansion(u, v).terms)
    for (int k : p.left_descents()) out.insert(left_s(k, p));
  return {out.begin(), out.end()};
}

namespace {

std::vector<Permutation> stabilization_candidates(Engine& engine, const Permutation& u,
                                                  const Permutation& v) {
  std::vector<Permutation> base = main_candidates(engine, u, v);
  std::set<Permutation> out(base.begin(), base.end());
  for (const auto& [p, c] : engine.product_expansion(one_times(u), one_times(v)).terms) {
    if (!p.has_left_descent(1)) continue;
    const Permutation q = left_s(1, p);
    if (q(1) == 1) out.insert(shift_down(q));
  }
  return {out.begin(), out.end()};
}

std::vector<Permutation> iterated_candidates(Engine& engine, const Permutation& u,
                                             const Permutation& v, int k) {
  std::set<Permutation> out;
  for (const auto& [top, c] : engine.product_expansion(u, v).terms)
    for (const auto& x : left_lower_set(top, k)) out.insert(x);
  const int lu = u.length();
  const int lv = v.length();
  for (int i = 0; i <= k; ++i) {
    if (i > lu || k - i > lv) continue;
    for (const auto& uh : left_lower_set(u, i))
      for (const auto& vh : left_lower_set(v, k - i))
        add_support(out, engine.product_expansion(uh, vh));
  }
  return {out.begin(), out.end()};
}

std::vector<Permutation> ktheory_candidates(Engine& engine, const Permutation& u,
                                            const Permutation& v) {
  std::set<Permutation> out;
  auto add = [&](const BetaExpansion& e) {
    for (const auto& [w, c] : e.terms) out.insert(w);
  };
  for (int i : u.left_descents()) add(engine.k_product_expansion_beta(left_s(i, u), v));
  for (int j : v.left_descents()) add(engine.k_product_expansion_beta(u, left_s(j, v)));
  for (const auto& [p, c] : engine.k_product_expansion_beta(u, v).terms) {
    out.insert(p);
    for (int k : p.left_descents()) out.insert(left_s(k, p));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Instance> enumerate_instances(Engine& engine, std::string_view identity, int n) {
  if (!is_known_identity(identity))
    throw std::invalid_argument("unknown identity '" + std::string(identity) + "'");
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  const std::string name(identity);
  const auto group = all_permutations(n);
  std::vector<Instance> out;
  auto unary = [&] {
    for (const auto& w : group) out.push_back({name, {}, {}, w});
  };
  if (name == "hpsw" || name == "macdonald" || name == "psw" || name == "g-ones") {
    unary();
  } else if (name == "main" || name == "stabilization" || name == "ktheory" ||
             name == "ktheory-corrected") {
    for (const auto& u : group)
      for (const auto& v : group) {
        const auto ws = name == "main"            ? main_candidates(engine, u, v)
                        : name == "stabilization" ? stabilization_candidates(engine, u, v)
                                                  : ktheory_candidates(engine, u, v);
        for (const auto& w : ws) out.push_back({name, u, v, w});
      }
  } else if (name == "monk") {
    for (const auto& v : group)
      for (int i = 1; i <= n; ++i) out.push_back({name, {}, v, {}, i});
  } else if (name == "residue") {
    for (int alpha = 2; alpha < n; ++alpha)
      for (const auto& u : group)
        for (const auto& v : group) {
          auto ok = [alpha](const Permutation& x) {
            for (int d : x.left_descents())
              if (d % alpha != 0) return false;
            return true;
          };
          if (!ok(u) || !ok(v)) continue;
          std::set<Permutation> ws;
          for (const auto& [p, c] : engine.product_expansion(u, v).terms)
            for (int k : p.left_descents()) ws.insert(left_s(k, p));
          for (const auto& w : ws) {
            Instance inst{name, u, v, w};
            inst.alpha = alpha;
            out.push_back(inst);
          }
        }
  } else if (name == "iterated") {
    for (const auto& u : group)
      for (const auto& v : group)
        for (int k = 1; k <= u.length() + v.length(); ++k)
          for (const auto& w : iterated_candidates(engine, u, v, k)) {
            if (w.length() != u.length() + v.length() - k) continue;
            Instance inst{name, u, v, w};
            inst.k = k;
            out.push_back(inst);
          }
  } else if (name == "kronecker") {
    for (const auto& u : group)
      for (const auto& v : group) {
        if (u.is_identity() || v.is_identity()) continue;
        for (int i = 1; i < n; ++i) {
          Instance inst{name, u, v, {}, i};
          inst.rank = n;
          out.push_back(inst);
        }
      }
  } else if (name == "dc") {
    for (const auto& u : group)
      for (const auto& v : group) out.push_back({name, u, v, {}});
  }
  return out;
}

RelationReport run_instance(Engine& engine, const Instance& in) {
  const std::string& name = in.identity;
  if (name == "hpsw") return check_hpsw(engine, in.w);
  if (name == "main") return check_main(engine, in.u, in.v, in.w);
  if (name == "monk") return check_monk_like(engine, in.v, in.i);
  if (name == "residue") return check_residue(engine, in.u, in.v, in.w, in.alpha);
  if (name == "stabilization") return check_stabilization(engine, in.u, in.v, in.w);
  if (name == "macdonald") return check_macdonald(engine, in.w);
  if (name == "iterated") return check_iterated(engine, in.u, in.v, in.w, in.k);
  if (name == "kronecker") return check_kronecker(engine, in.u, in.v, in.i, in.rank);
  if (name == "dc") return check_dc_triviality(engine, in.u, in.v);
  if (name == "psw") return check_psw(engine, in.w);
  if (name == "ktheory") return check_ktheory_main(engine, in.u, in.v, in.w);
  if (name == "g-ones") return check_g_ones(engine, in.w);
  if (name == "ktheory-corrected") return check_ktheory_corrected(engine, in.u, in.v, in.w);
  throw std::invalid_argument("unknown identity '" + name + "'");
}

}  // namespace schubert
