#include "schubert/cache_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "schubert/polynomial_text.hpp"

namespace schubert {

namespace fs = std::filesystem;

fs::path cache_path_for(const fs::path& base, Basis basis) {
  if (basis == Basis::schubert) return base;
  fs::path p = base;
  p += "." + std::string(basis_name(basis));
  return p;
}

namespace {

std::string render_code(const std::vector<int>& code) {
  std::string out;
  for (std::size_t k = 0; k < code.size(); ++k)
    out += (k ? "," : "") + std::to_string(code[k]);
  return out;
}

template <typename Poly>
void write_records(const fs::path& path, Basis basis,
                   const std::map<std::vector<int>, Poly>& records) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << cache_magic << ' ' << cache_format_version << ' ' << basis_name(basis) << '\n';
    for (const auto& [code, poly] : records)
      out << "code=" << render_code(code) << " poly=" << to_string(poly) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("error writing cache file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot replace cache file " + path.string() + ": " +
                             ec.message());
  }
}

std::vector<int> parse_code(std::string_view text, std::size_t line) {
  std::vector<int> code;
  if (text.empty()) return code;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = -1;
    auto [end, err] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (err != std::errc() || end != field.data() + field.size() || value < 0)
      throw CacheError("line " + std::to_string(line) + ": bad code entry '" +
                       std::string(field) + "'");
    code.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!code.empty() && code.back() == 0)
    throw CacheError("line " + std::to_string(line) + ": code is not trimmed");
  return code;
}

template <typename Poly>
Poly parse_poly(std::string_view text) {
  if constexpr (std::is_same_v<Poly, IntPoly>)
    return parse_int_poly(text);
  else
    return parse_beta_poly(text);
}

// Basis polynomials have lowest-degree leading monomial x^code with
// coefficient 1; checking it catches records filed under the wrong code.
template <typename Poly>
void check_leading(const Poly& poly, const std::vector<int>& code, std::size_t line) {
  const Monomial expected(code);
  if (poly.is_zero() || elimination_leading_monomial(poly) != expected ||
      poly.coeff(expected) != typename Poly::Coefficient(1))
    throw CacheError("line " + std::to_string(line) +
                     ": polynomial does not lead with x^code");
}

template <typename Poly>
CacheLoadResult read_records(const fs::path& path, Basis basis,
                             std::map<std::vector<int>, Poly>& records) {
  std::ifstream in(path);
  if (!in) return {CacheLoadStatus::missing, 0};
  std::string line;
  if (!std::getline(in, line)) throw CacheError("line 1: empty cache file");
  std::istringstream header(line);
  std::string magic, basis_tag;
  int version = 0;
  header >> magic >> version >> basis_tag;
  if (magic != cache_magic) throw CacheError("line 1: not a cache file (bad magic)");
  if (version != cache_format_version) return {CacheLoadStatus::version_mismatch, 0};
  if (basis_tag != basis_name(basis))
    throw CacheError("line 1: cache holds basis '" + basis_tag + "', expected '" +
                     std::string(basis_name(basis)) + "'");
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.rfind("code=", 0) != 0)
      throw CacheError("line " + std::to_string(number) + ": expected 'code='");
    const std::size_t sep = line.find(" poly=");
    if (sep == std::string::npos)
      throw CacheError("line " + std::to_string(number) + ": expected ' poly='");
    auto code = parse_code(std::string_view(line).substr(5, sep - 5), number);
    Poly poly;
    try {
      poly = parse_poly<Poly>(std::string_view(line).substr(sep + 6));
    } catch (const std::exception& e) {
      throw CacheError("line " + std::to_string(number) + ": " + e.what());
    }
    try {
      (void)permutation_of_code(Monomial(code));
    } catch (const std::exception& e) {
      throw CacheError("line " + std::to_string(number) + ": " + e.what());
    }
    check_leading(poly, code, number);
    if (!records.emplace(std::move(code), std::move(poly)).second)
      throw CacheError("line " + std::to_string(number) + ": duplicate code");
  }
  return {CacheLoadStatus::loaded, records.size()};
}

}  // namespace

void cache_store(const fs::path& path, const Engine& engine, Basis basis) {
  if (basis == Basis::beta_grothendieck)
    write_records(path, basis, engine.cached_beta());
  else
    write_records(path, basis, engine.cached(basis));
}

CacheLoadResult cache_load(const fs::path& path, Engine& engine, Basis basis) {
  if (basis == Basis::beta_grothendieck) {
    std::map<std::vector<int>, BetaPolynomial> records;
    auto result = read_records(path, basis, records);
    for (auto& [code, poly] : records) engine.preload_beta(code, std::move(poly));
    return result;
  }
  std::map<std::vector<int>, IntPoly> records;
  auto result = read_records(path, basis, records);
  for (auto& [code, poly] : records) engine.preload(basis, code, std::move(poly));
  return result;
}

namespace {
constexpr Basis all_bases[] = {Basis::schubert, Basis::grothendieck, Basis::beta_grothendieck};
}

std::vector<std::string> cache_load_all(const fs::path& base, Engine& engine) {
  std::vector<std::string> warnings;
  for (Basis b : all_bases) {
    const fs::path p = cache_path_for(base, b);
    try {
      if (cache_load(p, engine, b).status == CacheLoadStatus::version_mismatch)
        warnings.push_back(p.string() + ": format version differs, ignored");
    } catch (const std::exception& e) {
      warnings.push_back(p.string() + ": " + e.what() + ", ignored");
    }
  }
  return warnings;
}

std::vector<std::string> cache_store_all(const fs::path& base, const Engine& engine) {
  std::vector<std::string> warnings;
  for (Basis b : all_bases) {
    const fs::path p = cache_path_for(base, b);
    try {
      cache_store(p, engine, b);
    } catch (const std::exception& e) {
      warnings.push_back(p.string() + ": " + e.what());
    }
  }
  return warnings;
}

}  // namespace schubert
