#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gainline {

/// Index of a group element inside its FiniteGroup (0..order-1).
using Elem = int;

/// A finite group given by its multiplication table. Elements are plain
/// indices so gain arithmetic is table lookups; user-facing labels are kept
/// alongside and resolved at the I/O boundary.
class FiniteGroup {
 public:
  /// Validates the table: Latin square, two-sided identity, inverses.
  /// Associativity is checked on all triples up to order 64 and on random
  /// samples above; groups that were only sampled report trusted() == false.
  FiniteGroup(std::string name, int order, std::vector<Elem> table,
              std::vector<std::string> labels = {});

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  Elem identity() const { return identity_; }

  Elem mul(Elem a, Elem b) const {
    check(a);
    check(b);
    return table_[static_cast<size_t>(a) * order_ + b];
  }
  Elem inverse(Elem g) const {
    check(g);
    return inv_[g];
  }
  /// by^{-1} * g * by
  Elem conjugate(Elem g, Elem by) const { return mul(mul(inverse(by), g), by); }

  bool is_involution(Elem g) const { return mul(g, g) == identity_; }
  bool is_central(Elem g) const;
  bool is_central_involution(Elem g) const {
    return is_involution(g) && is_central(g);
  }
  /// All central involutions, identity included (s may be trivial).
  const std::vector<Elem>& central_involutions() const {
    return central_involutions_;
  }

  bool abelian() const { return abelian_; }
  bool trusted() const { return trusted_; }
  /// The pre-flagged canonical central involution, set for t2 (its -1).
  std::optional<Elem> canonical_involution() const {
    return canonical_involution_;
  }

  const std::string& label(Elem g) const {
    check(g);
    return labels_[g];
  }
  std::optional<Elem> element_by_label(const std::string& label) const;

  void set_canonical_involution(Elem g);

 private:
  void check(Elem g) const {
    if (g < 0 || g >= order_)
      throw std::out_of_range("group element index " + std::to_string(g) +
                              " out of range for group of order " +
                              std::to_string(order_));
  }

  std::string name_;
  int order_;
  std::vector<Elem> table_;  // row-major, table_[a*order+b] = a*b
  std::vector<Elem> inv_;
  Elem identity_;
  std::vector<std::string> labels_;
  std::vector<Elem> central_involutions_;
  bool abelian_ = false;
  bool trusted_ = true;
  std::optional<Elem> canonical_involution_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Builds a group from a spec string: "t2", "cyclic(n)", "dihedral(n)",
/// "quaternion8", "symmetric(n)" with n <= 4, or a path to a table file.
GroupPtr named_group(const std::string& spec);

/// Table file format: line "order n", then n rows of n indices
/// (row g lists g*h for h = 0..n-1), optional line "labels a b c ...".
GroupPtr group_from_table_file(const std::string& path);

}  // namespace gainline
