#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilcontact {

// Root in coordinates over the simple roots.
using Root = std::vector<int>;

// Reduced irreducible root system of type A..G, rank <= 8, Bourbaki numbering.
// Inner products are scaled so short roots have squared length 2.
class RootSystem {
public:
  // Throws InputError for an invalid (type, rank) pair.
  RootSystem(char type, int rank);
  // Parses "E8", "b4", ...
  static RootSystem parse(const std::string& name);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  // (alpha_i, alpha_j)
  const std::vector<std::vector<int>>& gram() const { return gram_; }
  // <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
  int cartan(int i, int j) const { return 2 * gram_[i][j] / gram_[j][j]; }

  // Positive roots by height (ties broken lexicographically), then their negatives
  // in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_positive() const { return roots_.size() / 2; }
  std::optional<std::size_t> index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r).has_value(); }
  const Root& highest_root() const { return roots_[num_positive() - 1]; }
  Root simple_root(int i) const;

  int inner(const Root& a, const Root& b) const;
  // <a, b^vee> = 2 (a, b) / (b, b)
  int pairing(const Root& a, const Root& b) const;
  static int height(const Root& r);

  // Classification count |Phi| for the type, independent of the enumeration.
  static std::size_t expected_root_count(char type, int rank);

private:
  char type_;
  int rank_;
  std::vector<std::vector<int>> gram_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
};

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);
std::string format_root(const Root& r);

}  // namespace nilcontact
