#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace potts {

// A multiset of 1-based site indices. Repeats are significant: sigma^R is the
// product of centered spins taken with multiplicity.
//
// Sites occurring an odd number of times form the odd groups; sites occurring
// an even (positive) number of times form the even groups. A list with no odd
// group has sigma^R >= 0 at every configuration.
class IndexList {
 public:
  IndexList() = default;
  IndexList(std::initializer_list<int> sites);
  explicit IndexList(std::vector<int> sites);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  const std::map<int, int>& multiplicities() const noexcept { return counts_; }
  int multiplicity(int site) const;

  // Support R' in ascending order.
  std::vector<int> support() const;
  std::vector<int> odd_sites() const;
  std::vector<int> even_sites() const;
  bool has_odd_group() const;

  int max_site() const noexcept;

  // Throws std::out_of_range if an entry exceeds n.
  void require_within(int n) const;

  std::string to_string() const;

  friend bool operator==(const IndexList& a, const IndexList& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<int> entries_;
  std::map<int, int> counts_;
};

// RS = [R, S].
IndexList concat(const IndexList& r, const IndexList& s);

// Parses "1,3,3" (whitespace tolerated, empty string is the empty list).
IndexList parse_index_list(std::string_view text);

}  // namespace potts
