#include "nilcontact/roots.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "nilcontact/errors.hpp"

namespace nilcontact {

namespace {

using Gram = std::vector<std::vector<int>>;

void link(Gram& g, int i, int j, int v) {
  g[i][j] = v;
  g[j][i] = v;
}

// Simply-laced chain 0 - 1 - ... - (n-1).
Gram chain(int n) {
  Gram g(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) link(g, i, i + 1, -1);
  return g;
}

Gram build_gram(char type, int n) {
  switch (type) {
    case 'A':
      if (n < 1 || n > 8) break;
      return chain(n);
    case 'B': {
      if (n < 2 || n > 8) break;
      // alpha_1 .. alpha_{n-1} long, alpha_n short
      Gram g = chain(n);
      for (int i = 0; i + 1 < n; ++i) g[i][i] = 4;
      for (int i = 0; i + 2 < n; ++i) link(g, i, i + 1, -2);
      link(g, n - 2, n - 1, -2);
      return g;
    }
    case 'C': {
      if (n < 2 || n > 8) break;
      Gram g = chain(n);
      g[n - 1][n - 1] = 4;
      link(g, n - 2, n - 1, -2);
      return g;
    }
    case 'D': {
      if (n < 4 || n > 8) break;
      Gram g = chain(n);
      link(g, n - 2, n - 1, 0);
      link(g, n - 3, n - 1, -1);
      return g;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      // 1 - 3 - 4 - 5 - ... with 2 attached to 4
      Gram g(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(g, i, i + 1, -1);
      return g;
    }
    case 'F': {
      if (n != 4) break;
      Gram g = chain(4);
      g[0][0] = g[1][1] = 4;
      link(g, 0, 1, -2);
      link(g, 1, 2, -2);
      return g;
    }
    case 'G': {
      if (n != 2) break;
      Gram g = chain(2);
      g[1][1] = 6;
      link(g, 0, 1, -3);
      return g;
    }
    default:
      break;
  }
  throw InputError(std::string("root system: unsupported type ") + type + std::to_string(n));
}

}  // namespace

Root operator+(const Root& a, const Root& b) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Root operator-(const Root& a, const Root& b) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Root operator-(const Root& a) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::string format_root(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + ")";
}

RootSystem::RootSystem(char type, int rank)
    : type_(static_cast<char>(std::toupper(static_cast<unsigned char>(type)))), rank_(rank) {
  gram_ = build_gram(type_, rank_);

  // Closure of the simple roots under simple reflections.
  std::set<Root> seen;
  std::deque<Root> todo;
  for (int i = 0; i < rank_; ++i) {
    seen.insert(simple_root(i));
    todo.push_back(simple_root(i));
  }
  while (!todo.empty()) {
    Root b = todo.front();
    todo.pop_front();
    for (int i = 0; i < rank_; ++i) {
      Root r = b;
      r[i] -= pairing(b, simple_root(i));
      if (seen.insert(r).second) todo.push_back(r);
    }
  }

  std::vector<Root> pos;
  for (const auto& r : seen) {
    if (height(r) > 0) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(-r);
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);
}

RootSystem RootSystem::parse(const std::string& name) {
  if (name.size() < 2) throw InputError("root system: expected a name like E8, got '" + name + "'");
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
      throw InputError("root system: expected a name like E8, got '" + name + "'");
    }
    rank = rank * 10 + (name[i] - '0');
    if (rank > 99) throw InputError("root system: rank too large in '" + name + "'");
  }
  return RootSystem(name[0], rank);
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Root RootSystem::simple_root(int i) const {
  Root r(rank_, 0);
  r[i] = 1;
  return r;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * gram_[i][j];
  }
  return s;
}

int RootSystem::pairing(const Root& a, const Root& b) const { return 2 * inner(a, b) / inner(b, b); }

int RootSystem::height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

std::size_t RootSystem::expected_root_count(char type, int n) {
  switch (std::toupper(static_cast<unsigned char>(type))) {
    case 'A':
      return static_cast<std::size_t>(n * (n + 1));
    case 'B':
    case 'C':
      return static_cast<std::size_t>(2 * n * n);
    case 'D':
      return static_cast<std::size_t>(2 * n * (n - 1));
    case 'E':
      return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F':
      return 48;
    case 'G':
      return 12;
    default:
      return 0;
  }
}

}  // namespace nilcontact
