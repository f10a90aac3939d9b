#ifndef BELYI_PASSPORT_HPP
#define BELYI_PASSPORT_HPP

#include <string>
#include <vector>

namespace belyi {

// Ramification multisets over infinity, 0, 1 (in that order), entries kept
// sorted descending.
struct BranchingPassport {
  std::vector<int> over_inf;
  std::vector<int> over_zero;
  std::vector<int> over_one;

  long degree() const;            // common fiber sum (checked)
  long ramification_sum() const;  // sum of (e-1) over all three fibers
  bool fiber_sums_match() const;

  void sort_entries();
  bool operator==(const BranchingPassport& o) const;
  bool operator!=(const BranchingPassport& o) const { return !(*this == o); }

  // Canonical string: entries descending, "^" exponents, fibers "/"-separated.
  std::string str() const;
  static BranchingPassport parse(const std::string& s);

  // Each entry repeated k times in every fiber (isogeny composition).
  BranchingPassport repeated(int k) const;
  // Fibers over 0 and over infinity interchanged (black/white recoloring).
  BranchingPassport swapped_inf_zero() const;
};

std::string fiber_to_string(const std::vector<int>& fiber);
std::vector<int> parse_fiber(const std::string& s);

}  // namespace belyi

#endif
