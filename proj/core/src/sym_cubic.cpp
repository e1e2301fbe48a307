#include "nilcontact/sym_cubic.hpp"

#include <algorithm>
#include <cstdio>

#include "nilcontact/errors.hpp"

namespace nilcontact {

namespace {

Scalar trilinear(const SymCubic& t, const Vec& u, const Vec& v, const Vec& w) {
  Scalar total = 0;
  for (const auto& [o, value] : t.expanded()) {
    if (u[o[0]] == 0 || v[o[1]] == 0 || w[o[2]] == 0) continue;
    total += value * u[o[0]] * v[o[1]] * w[o[2]];
  }
  return total;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const mpz_class& z, std::uint64_t q) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), q);
  return r.get_ui();
}

}  // namespace

Triple canonical_triple(std::size_t i, std::size_t j, std::size_t k) {
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Triple> orderings(const Triple& t) {
  std::vector<Triple> out;
  Triple p = t;
  std::sort(p.begin(), p.end());
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SymCubic::SymCubic(std::size_t dim, std::map<Triple, Scalar> entries) : dim_(dim) {
  for (auto& [key, value] : entries) {
    if (key != canonical_triple(key[0], key[1], key[2])) {
      throw InputError("SymCubic: entry key is not sorted");
    }
    if (key[2] >= dim) throw InputError("SymCubic: entry index out of range");
    if (value != 0) entries_.emplace(key, std::move(value));
  }
  for (const auto& [key, value] : entries_) {
    for (const auto& o : orderings(key)) expanded_.emplace_back(o, value);
  }
}

SymCubic SymCubic::from_polynomial(std::size_t dim, const std::vector<Monomial>& terms) {
  std::map<Triple, Scalar> acc;
  for (const auto& m : terms) {
    Triple key = canonical_triple(m.i, m.j, m.k);
    if (key[2] >= dim) throw InputError("from_polynomial: variable index out of range");
    // The monomial appears once per distinct ordering in the full sum.
    acc[key] += m.coefficient / static_cast<long>(orderings(key).size());
  }
  return SymCubic(dim, std::move(acc));
}

Scalar SymCubic::at(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw InputError("SymCubic::at: index out of range");
  auto it = entries_.find(canonical_triple(i, j, k));
  return it == entries_.end() ? Scalar(0) : it->second;
}

SymCubic SymCubic::normalized() const {
  if (entries_.empty()) return *this;
  return scaled(1 / entries_.begin()->second);
}

SymCubic SymCubic::scaled(const Scalar& s) const {
  std::map<Triple, Scalar> e;
  for (const auto& [key, value] : entries_) e.emplace(key, value * s);
  return SymCubic(dim_, std::move(e));
}

SymCubic SymCubic::transformed(const Matrix& m) const {
  require_dim(m.rows(), dim_, "SymCubic::transformed");
  require_dim(m.cols(), dim_, "SymCubic::transformed");
  std::vector<Vec> images;
  for (std::size_t a = 0; a < dim_; ++a) images.push_back(m.col(a));
  std::map<Triple, Scalar> e;
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = a; b < dim_; ++b) {
      for (std::size_t c = b; c < dim_; ++c) {
        Scalar v = trilinear(*this, images[a], images[b], images[c]);
        if (v != 0) e.emplace(Triple{a, b, c}, v);
      }
    }
  }
  return SymCubic(dim_, std::move(e));
}

Scalar cubic_eval(const SymCubic& t, const Vec& v) {
  require_dim(v.size(), t.dim(), "cubic_eval");
  Scalar total = 0;
  for (const auto& [key, value] : t.entries()) {
    if (v[key[0]] == 0 || v[key[1]] == 0 || v[key[2]] == 0) continue;
    total += value * static_cast<long>(orderings(key).size()) * v[key[0]] * v[key[1]] * v[key[2]];
  }
  return total;
}

Covec polarize(const SymCubic& t, const Vec& v1, const Vec& v2) {
  require_dim(v1.size(), t.dim(), "polarize");
  require_dim(v2.size(), t.dim(), "polarize");
  Covec out(t.dim());
  for (const auto& [o, value] : t.expanded()) {
    if (v1[o[0]] == 0 || v2[o[1]] == 0) continue;
    out[o[2]] += value * v1[o[0]] * v2[o[1]];
  }
  return out;
}

std::size_t b_rank(const SymCubic& t) {
  const std::size_t p = t.dim();
  // Row for the pair (i, j) is k -> T(e_i, e_j, e_k).
  std::map<std::pair<std::size_t, std::size_t>, Vec> rows;
  for (const auto& [o, value] : t.expanded()) {
    if (o[0] > o[1]) continue;
    auto [it, inserted] = rows.try_emplace({o[0], o[1]}, zero_vec(p));
    it->second[o[2]] = value;
  }
  if (rows.empty()) return 0;
  std::vector<Vec> r;
  r.reserve(rows.size());
  for (auto& [_, row] : rows) r.push_back(std::move(row));
  return rank(Matrix::from_rows(r));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FFTensor::FFTensor(std::uint64_t modulus, std::size_t dim, std::map<Triple, std::uint64_t> entries)
    : modulus_(modulus), dim_(dim), entries_(std::move(entries)) {
  for (const auto& [key, value] : entries_) {
    if (value == 0) continue;
    for (const auto& o : orderings(key)) expanded_.push_back({o[0], o[1], o[2], value});
  }
  const u128 worst =
      static_cast<u128>(modulus_) * modulus_ * modulus_ * (expanded_.size() + 1);
  lazy_reduction_ = worst < (static_cast<u128>(1) << 63);
}

void FFTensor::polarize_diagonal(const std::vector<std::uint64_t>& v, std::vector<std::uint64_t>& out) const {
  std::fill(out.begin(), out.end(), 0);
  // Small moduli: every product is below q^3, so the sums cannot overflow before one
  // final reduction.
  if (lazy_reduction_) {
    for (const auto& e : expanded_) out[e.k] += e.value * v[e.i] * v[e.j];
    for (auto& x : out) x %= modulus_;
    return;
  }
  for (const auto& e : expanded_) {
    if (v[e.i] == 0 || v[e.j] == 0) continue;
    out[e.k] = (out[e.k] + mulmod(e.value, mulmod(v[e.i], v[e.j], modulus_), modulus_)) % modulus_;
  }
}

FFTensor reduce_mod(const SymCubic& t, std::uint64_t q) {
  if (!is_prime(q)) throw InputError("reduce_mod: modulus " + std::to_string(q) + " is not prime");
  std::map<Triple, std::uint64_t> out;
  for (const auto& [key, value] : t.entries()) {
    const std::uint64_t den = residue(value.get_den(), q);
    if (den == 0) {
      throw ReductionError("reduce_mod: denominator of entry (" + std::to_string(key[0] + 1) + "," +
                               std::to_string(key[1] + 1) + "," + std::to_string(key[2] + 1) +
                               ") = " + format_scalar(value) + " is divisible by " + std::to_string(q),
                           key);
    }
    const std::uint64_t num = residue(value.get_num(), q);
    const std::uint64_t r = mulmod(num, powmod(den, q - 2, q), q);
    if (r != 0) out.emplace(key, r);
  }
  return FFTensor(q, t.dim(), std::move(out));
}

nlohmann::json to_json(const SymCubic& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : t.entries()) {
    entries.push_back({{"i", key[0] + 1}, {"j", key[1] + 1}, {"k", key[2] + 1}, {"value", format_scalar(value)}});
  }
  return {{"dim", t.dim()}, {"entries", std::move(entries)}};
}

SymCubic cubic_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("tensor JSON: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw InputError("tensor JSON: 'dim' must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(j["dim"].get<long long>());
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw InputError("tensor JSON: 'entries' must be an array");
  }
  std::map<Triple, Scalar> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_object()) throw InputError("tensor JSON: entry is not an object");
    std::array<long long, 3> idx{};
    const char* names[3] = {"i", "j", "k"};
    for (int n = 0; n < 3; ++n) {
      if (!e.contains(names[n]) || !e[names[n]].is_number_integer()) {
        throw InputError(std::string("tensor JSON: entry field '") + names[n] + "' must be an integer");
      }
      idx[n] = e[names[n]].get<long long>();
      if (idx[n] < 1 || static_cast<std::size_t>(idx[n]) > dim) {
        throw InputError("tensor JSON: entry index out of range 1.." + std::to_string(dim));
      }
    }
    if (!(idx[0] <= idx[1] && idx[1] <= idx[2])) {
      throw InputError("tensor JSON: entry indices must satisfy i <= j <= k");
    }
    if (!e.contains("value")) throw InputError("tensor JSON: entry without 'value'");
    Scalar value;
    if (e["value"].is_string()) {
      value = parse_scalar(e["value"].get<std::string>());
    } else if (e["value"].is_number_integer()) {
      value = Scalar(static_cast<long>(e["value"].get<long long>()));
    } else {
      throw InputError("tensor JSON: 'value' must be a \"num/den\" string");
    }
    Triple key{static_cast<std::size_t>(idx[0] - 1), static_cast<std::size_t>(idx[1] - 1),
               static_cast<std::size_t>(idx[2] - 1)};
    if (!entries.emplace(key, value).second) throw InputError("tensor JSON: duplicate entry");
  }
  return SymCubic(dim, std::move(entries));
}

SymCubic parse_cubic(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("tensor JSON: ") + e.what());
  }
  return cubic_from_json(j);
}

std::string dump_cubic(const SymCubic& t) { return to_json(t).dump(); }

std::string cubic_hash(const SymCubic& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : dump_cubic(t)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nilcontact
