#include "belyi/passport.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "belyi/errors.hpp"

namespace belyi {

namespace {
long fiber_sum(const std::vector<int>& f) {
  return std::accumulate(f.begin(), f.end(), 0L);
}
}  // namespace

long BranchingPassport::degree() const { return fiber_sum(over_inf); }

long BranchingPassport::ramification_sum() const {
  long s = 0;
  for (const auto* f : {&over_inf, &over_zero, &over_one})
    for (int e : *f) s += e - 1;
  return s;
}

bool BranchingPassport::fiber_sums_match() const {
  long d = fiber_sum(over_inf);
  return fiber_sum(over_zero) == d && fiber_sum(over_one) == d;
}

void BranchingPassport::sort_entries() {
  auto desc = [](std::vector<int>& v) { std::sort(v.rbegin(), v.rend()); };
  desc(over_inf);
  desc(over_zero);
  desc(over_one);
}

bool BranchingPassport::operator==(const BranchingPassport& o) const {
  BranchingPassport a = *this, b = o;
  a.sort_entries();
  b.sort_entries();
  return a.over_inf == b.over_inf && a.over_zero == b.over_zero &&
         a.over_one == b.over_one;
}

std::string fiber_to_string(const std::vector<int>& fiber) {
  std::vector<int> v = fiber;
  std::sort(v.rbegin(), v.rend());
  std::ostringstream os;
  for (size_t i = 0; i < v.size();) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (i) os << ' ';
    os << v[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string BranchingPassport::str() const {
  return fiber_to_string(over_inf) + "/" + fiber_to_string(over_zero) + "/" +
         fiber_to_string(over_one);
}

std::vector<int> parse_fiber(const std::string& s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    size_t caret = tok.find('^');
    int base = 0, count = 1;
    try {
      if (caret == std::string::npos) {
        base = std::stoi(tok);
      } else {
        base = std::stoi(tok.substr(0, caret));
        count = std::stoi(tok.substr(caret + 1));
      }
    } catch (const std::exception&) {
      fail(ErrorKind::SchemaError, "bad passport token: " + tok);
    }
    if (base <= 0 || count <= 0)
      fail(ErrorKind::SchemaError, "bad passport token: " + tok);
    for (int i = 0; i < count; ++i) out.push_back(base);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

BranchingPassport BranchingPassport::parse(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == '/') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    fail(ErrorKind::SchemaError, "passport needs three '/'-separated fibers: " + s);
  BranchingPassport p;
  p.over_inf = parse_fiber(parts[0]);
  p.over_zero = parse_fiber(parts[1]);
  p.over_one = parse_fiber(parts[2]);
  return p;
}

BranchingPassport BranchingPassport::repeated(int k) const {
  BranchingPassport p;
  for (const auto& [src, dst] :
       {std::pair{&over_inf, &p.over_inf}, {&over_zero, &p.over_zero},
        {&over_one, &p.over_one}}) {
    for (int e : *src)
      for (int i = 0; i < k; ++i) dst->push_back(e);
  }
  p.sort_entries();
  return p;
}

BranchingPassport BranchingPassport::swapped_inf_zero() const {
  BranchingPassport p = *this;
  std::swap(p.over_inf, p.over_zero);
  return p;
}

}  // namespace belyi
