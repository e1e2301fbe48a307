#include "nilcontact/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

#include "nilcontact/errors.hpp"

namespace nilcontact {

namespace {

using Monomial = SymCubic::Monomial;

SymCubic from_terms(std::size_t p, const std::vector<Monomial>& terms) {
  return SymCubic::from_polynomial(p, terms).normalized();
}

// Lines of the Fano plane: e_a e_b = e_c along each oriented triple.
constexpr std::array<std::array<int, 3>, 7> kFano{{{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};

// Perfect matchings of {0..n-1} with the sign of the Pfaffian expansion.
void matchings(std::vector<int> rest, int sign, std::vector<std::pair<int, int>>& cur,
               std::vector<std::pair<int, std::vector<std::pair<int, int>>>>& out) {
  if (rest.empty()) {
    out.emplace_back(sign, cur);
    return;
  }
  const int first = rest[0];
  for (std::size_t j = 1; j < rest.size(); ++j) {
    std::vector<int> next;
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (k != j) next.push_back(rest[k]);
    }
    cur.emplace_back(first, rest[j]);
    // moving rest[j] next to rest[0] costs j - 1 transpositions
    matchings(next, (j % 2 == 1) ? sign : -sign, cur, out);
    cur.pop_back();
  }
}

std::size_t pfaff_index(int i, int j) {
  // s_ij with i < j over {0..5}, lexicographic
  std::size_t idx = 0;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  }
  throw std::logic_error("pfaff_index: bad pair");
}

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

OctonionProduct octonion_mul(int a, int b) {
  if (a < 0 || a > 7 || b < 0 || b > 7) throw InputError("octonion_mul: index out of range");
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  for (const auto& t : kFano) {
    for (int r = 0; r < 3; ++r) {
      const int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
      if (a == x && b == y) return {1, z};
      if (a == y && b == x) return {-1, z};
    }
  }
  throw std::logic_error("octonion_mul: pair not on a Fano line");
}

SymCubic cubic_x3() { return from_terms(1, {{0, 0, 0, 1}}); }

SymCubic cubic_xq(std::size_t p) {
  if (p < 2) throw InputError("xq: needs p >= 2");
  std::vector<Monomial> t;
  for (std::size_t i = 1; i < p; ++i) t.push_back({0, i, i, 1});
  return from_terms(p, t);
}

SymCubic cubic_xyz() { return from_terms(3, {{0, 1, 2, 1}}); }

SymCubic cubic_fermat(std::size_t p) {
  std::vector<Monomial> t;
  for (std::size_t i = 0; i < p; ++i) t.push_back({i, i, i, 1});
  return from_terms(p, t);
}

SymCubic cubic_det_sym3() {
  // [[a, d, e], [d, b, f], [e, f, c]]: abc + 2def - af^2 - be^2 - cd^2
  enum { a, b, c, d, e, f };
  return from_terms(6, {{a, b, c, 1}, {d, e, f, 2}, {a, f, f, -1}, {b, e, e, -1}, {c, d, d, -1}});
}

SymCubic cubic_det3() {
  std::vector<Monomial> t;
  std::array<int, 3> perm{0, 1, 2};
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) inversions += perm[i] > perm[j];
    }
    t.push_back({static_cast<std::size_t>(perm[0]), static_cast<std::size_t>(3 + perm[1]),
                 static_cast<std::size_t>(6 + perm[2]), inversions % 2 ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return from_terms(9, t);
}

SymCubic cubic_pfaff6() {
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> ms;
  std::vector<std::pair<int, int>> cur;
  matchings({0, 1, 2, 3, 4, 5}, 1, cur, ms);
  std::vector<Monomial> t;
  for (const auto& [sign, m] : ms) {
    t.push_back({pfaff_index(m[0].first, m[0].second), pfaff_index(m[1].first, m[1].second),
                 pfaff_index(m[2].first, m[2].second), sign});
  }
  return from_terms(15, t);
}

SymCubic cubic_j3o() {
  // [[l1, a3, a2*], [a3*, l2, a1], [a2, a1*, l3]]
  // N = l1 l2 l3 - l1 n(a1) - l2 n(a2) - l3 n(a3) + t(a1 (a2 a3))
  auto lam = [](std::size_t i) { return i; };
  auto oct = [](std::size_t which, std::size_t k) { return 3 + 8 * which + k; };
  std::vector<Monomial> t{{lam(0), lam(1), lam(2), 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 8; ++k) t.push_back({lam(i), oct(i, k), oct(i, k), -1});
  }
  // t(x) = 2 Re(x); Re(e_i (e_j e_k)) is nonzero only when e_j e_k = +-e_i
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      for (int k = 0; k < 8; ++k) {
        const OctonionProduct jk = octonion_mul(j, k);
        const OctonionProduct ijk = octonion_mul(i, jk.index);
        if (ijk.index != 0) continue;
        t.push_back({oct(0, static_cast<std::size_t>(i)), oct(1, static_cast<std::size_t>(j)),
                     oct(2, static_cast<std::size_t>(k)), 2 * jk.sign * ijk.sign});
      }
    }
  }
  return from_terms(27, t);
}

Vec det3_identity() {
  Vec v = zero_vec(9);
  v[0] = v[4] = v[8] = 1;
  return v;
}

Vec pfaff6_standard() {
  Vec v = zero_vec(15);
  v[pfaff_index(0, 1)] = v[pfaff_index(2, 3)] = v[pfaff_index(4, 5)] = 1;
  return v;
}

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries{
      {"x3", 1, "x^3", cubic_x3, false},
      {"xq3", 3, "x_1 (x_2^2 + x_3^2); other p via xq<p>", [] { return cubic_xq(3); }, false},
      {"xyz", 3, "xyz, norm of Q x Q x Q", cubic_xyz, false},
      {"fermat3", 3, "x^3 + y^3 + z^3 (smooth reference, not a Jordan norm)", [] { return cubic_fermat(3); }, true},
      {"det-sym-3", 6, "determinant of a symmetric 3x3 matrix", cubic_det_sym3, false},
      {"det3", 9, "determinant of a 3x3 matrix", cubic_det3, false},
      {"pfaff6", 15, "Pfaffian of a skew 6x6 matrix", cubic_pfaff6, false},
      {"j3o-norm", 27, "cubic norm of 3x3 Hermitian octonion matrices", cubic_j3o, false},
  };
  return entries;
}

CatalogEntry find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog_list()) {
    if (e.name == name) return e;
  }
  if (name.rfind("xq", 0) == 0 && name.size() > 2 && name.size() <= 4 &&
      name.find_first_not_of("0123456789", 2) == std::string::npos) {
    const std::size_t p = std::stoul(name.substr(2));
    if (p >= 2 && p <= 27) {
      return {name, p, "x_1 (x_2^2 + ... + x_p^2)", [p] { return cubic_xq(p); }, false};
    }
  }
  throw InputError("unknown catalog entry '" + name + "'");
}

Signature signature(const SymCubic& t, const ProbeConfig& cfg) {
  Signature s;
  s.p = t.dim();
  s.b_rank = b_rank(t);
  const ProbeVerdict v = smoothness_probe(t, cfg);
  s.probe = v.verdict_class();
  s.probe_mode = v.mode();
  const SymCubic n = t.normalized();
  s.nonzero_entries = n.entries().size();
  Rng rng(0x7369676eULL);
  std::string values;
  for (int k = 0; k < 16; ++k) values += format_scalar(cubic_eval(n, rng.vec(t.dim()))) + ";";
  s.eval_hash = fnv_hex(values);
  return s;
}

nlohmann::json to_json(const Signature& s) {
  return {{"p", s.p},
          {"b_rank", s.b_rank},
          {"probe", s.probe},
          {"probe_mode", s.probe_mode},
          {"nonzero_entries", s.nonzero_entries},
          {"eval_hash", s.eval_hash}};
}

ComparisonReport compare_signatures(const std::string& entry, const Signature& catalog, const std::string& algebra,
                                    const Signature& extracted) {
  ComparisonReport r{entry, algebra, catalog, extracted, {}};
  if (catalog.p != extracted.p) {
    r.mismatches.push_back("p: " + std::to_string(catalog.p) + " vs " + std::to_string(extracted.p));
  }
  if (catalog.b_rank != extracted.b_rank) {
    r.mismatches.push_back("b_rank: " + std::to_string(catalog.b_rank) + " vs " + std::to_string(extracted.b_rank));
  }
  if (catalog.probe != extracted.probe) r.mismatches.push_back("probe: " + catalog.probe + " vs " + extracted.probe);
  return r;
}

ComparisonReport compare_to_extraction(const CatalogEntry& entry, const ChevalleyAlgebra& alg, const ProbeConfig& cfg) {
  const Extraction ex = extract_cubic(alg);
  return compare_signatures(entry.name, signature(entry.build(), cfg), alg.roots().name(), signature(ex.cubic, cfg));
}

nlohmann::json to_json(const ComparisonReport& r) {
  return {{"entry", r.entry},
          {"algebra", r.algebra},
          {"catalog", to_json(r.catalog)},
          {"extracted", to_json(r.extracted)},
          {"mismatches", r.mismatches},
          {"verdict", r.consistent() ? "signature-consistent" : "mismatch"}};
}

}  // namespace nilcontact
