#pragma once

// Integer partitions, pairs of partitions, dominance orders and the
// statistics attached to them. A pair (first; second) with |first| +
// |second| = n is written in the dotted exponent notation "21^2.3^2"
// meaning ((2,1,1);(3,3)); an empty side is left blank, so ".21" has an
// empty first component.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dkostka/intpoly.hpp"
#include "dkostka/ratfn.hpp"

namespace dkostka {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (size_t i = 0; i < p_.size(); ++i) {
      if (p_[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
      if (i + 1 < p_.size() && p_[i] < p_[i + 1])
        throw std::invalid_argument("Partition: parts not weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return p_; }
  int length() const { return (int)p_.size(); }
  bool empty() const { return p_.empty(); }
  int part(int i) const { return i < (int)p_.size() ? p_[i] : 0; }  // 0-based
  int sum() const { return std::accumulate(p_.begin(), p_.end(), 0); }

  bool operator==(const Partition& o) const { return p_ == o.p_; }
  bool operator!=(const Partition& o) const { return p_ != o.p_; }
  bool operator<(const Partition& o) const { return p_ < o.p_; }  // container order

  Partition conjugate() const {
    std::vector<int> c;
    for (int i = 0; !p_.empty() && i < p_[0]; ++i) {
      int cnt = 0;
      for (int part : p_)
        if (part > i) ++cnt;
      c.push_back(cnt);
    }
    return Partition(c);
  }

  int multiplicity(int k) const {
    return (int)std::count(p_.begin(), p_.end(), k);
  }

  // Multiset union, e.g. (2,1) u (2) = (2,2,1).
  Partition merged(const Partition& o) const {
    std::vector<int> m = p_;
    m.insert(m.end(), o.p_.begin(), o.p_.end());
    std::sort(m.rbegin(), m.rend());
    return Partition(m);
  }

  // Componentwise sum after padding, e.g. (2,1) + (2) = (4,1).
  Partition plus(const Partition& o) const {
    size_t len = std::max(p_.size(), o.p_.size());
    std::vector<int> s(len, 0);
    for (size_t i = 0; i < len; ++i) s[i] = part((int)i) + o.part((int)i);
    return Partition(s);
  }

  bool contains(const Partition& inner) const {
    for (int i = 0; i < inner.length(); ++i)
      if (part(i) < inner.part(i)) return false;
    return true;
  }

 private:
  std::vector<int> p_;
};

// n(lambda) = sum (i-1) lambda_i
inline long long n_stat(const Partition& la) {
  long long r = 0;
  for (int i = 0; i < la.length(); ++i) r += (long long)i * la.part(i);
  return r;
}

// z_lambda = prod_i i^{m_i} m_i!
inline Int z_int(const Partition& la) {
  Int r = 1;
  int max_part = la.empty() ? 0 : la.part(0);
  for (int k = 1; k <= max_part; ++k) {
    int m = la.multiplicity(k);
    for (int j = 0; j < m; ++j) r *= k;
    for (int j = 2; j <= m; ++j) r *= j;
  }
  return r;
}

// Dominance order on partitions of equal weight: mu <= la iff all prefix
// sums of mu are bounded by those of la.
inline bool dominance_le(const Partition& mu, const Partition& la) {
  if (mu.sum() != la.sum())
    throw std::invalid_argument("dominance_le: different weights");
  int len = std::max(mu.length(), la.length());
  long long smu = 0, sla = 0;
  for (int i = 0; i < len; ++i) {
    smu += mu.part(i);
    sla += la.part(i);
    if (smu > sla) return false;
  }
  return true;
}

inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

struct DoublePartition {
  Partition first, second;

  DoublePartition() = default;
  DoublePartition(Partition a, Partition b)
      : first(std::move(a)), second(std::move(b)) {}

  int sum() const { return first.sum() + second.sum(); }

  bool operator==(const DoublePartition& o) const {
    return first == o.first && second == o.second;
  }
  bool operator!=(const DoublePartition& o) const { return !(*this == o); }
  bool operator<(const DoublePartition& o) const {
    if (first != o.first) return first < o.first;
    return second < o.second;
  }
};

// Interleaved composition c(La) = (la'_1, la''_1, la'_2, la''_2, ...) after
// padding both components to a common length.
inline std::vector<int> interleave(const DoublePartition& la) {
  int k = std::max(la.first.length(), la.second.length());
  std::vector<int> c;
  c.reserve(2 * k);
  for (int i = 0; i < k; ++i) {
    c.push_back(la.first.part(i));
    c.push_back(la.second.part(i));
  }
  return c;
}

// a(La) = 2 n(la') + 2 n(la'') + |la''|
inline long long a_stat(const DoublePartition& la) {
  return 2 * n_stat(la.first) + 2 * n_stat(la.second) + la.second.sum();
}

// Dominance on pairs via prefix sums of the interleaved compositions.
inline bool double_dominance_le(const DoublePartition& mu, const DoublePartition& la) {
  if (mu.sum() != la.sum())
    throw std::invalid_argument("double_dominance_le: different weights");
  std::vector<int> cm = interleave(mu), cl = interleave(la);
  size_t len = std::max(cm.size(), cl.size());
  long long sm = 0, sl = 0;
  for (size_t i = 0; i < len; ++i) {
    sm += i < cm.size() ? cm[i] : 0;
    sl += i < cl.size() ? cl[i] : 0;
    if (sm > sl) return false;
  }
  return true;
}

// z_La(t) = 2^{l(la') + l(la'')} z_{la'} z_{la''}
//           prod_j (1 - t^{la'_j})^{-1} prod_j (1 + t^{la''_j})^{-1}
inline RatFn z_double(const DoublePartition& la) {
  Int num = z_int(la.first) * z_int(la.second);
  for (int i = 0; i < la.first.length() + la.second.length(); ++i) num *= 2;
  IntPoly den(1);
  for (int part : la.first.parts())
    den *= IntPoly(1) - IntPoly::t_power(part);
  for (int part : la.second.parts())
    den *= IntPoly(1) + IntPoly::t_power(part);
  return RatFn(IntPoly(num), den);
}

inline std::vector<DoublePartition> enumerate_double_partitions(int n) {
  std::vector<DoublePartition> out;
  for (int m = n; m >= 0; --m)
    for (const auto& a : enumerate_partitions(m))
      for (const auto& b : enumerate_partitions(n - m)) out.emplace_back(a, b);
  return out;
}

// Deterministic linear extension of double dominance, greatest first.
// Kahn topological sort; among the currently available elements the pick
// minimizes (|la''| ascending, then interleaved composition lex descending).
// The alternate flavor inverts the pick, giving a second valid extension
// for order-independence checks.
inline std::vector<DoublePartition> total_order(int n, bool alternate = false) {
  std::vector<DoublePartition> elems = enumerate_double_partitions(n);
  const int m = (int)elems.size();
  std::vector<std::vector<char>> ge(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      ge[i][j] = i != j && double_dominance_le(elems[j], elems[i]);

  auto key_less = [&](int x, int y) {
    int kx = elems[x].second.sum(), ky = elems[y].second.sum();
    if (kx != ky) return kx < ky;
    std::vector<int> cx = interleave(elems[x]), cy = interleave(elems[y]);
    cx.resize(2 * n, 0);
    cy.resize(2 * n, 0);
    return cx > cy;  // lex descending
  };

  std::vector<char> emitted(m, 0);
  std::vector<DoublePartition> out;
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int i = 0; i < m; ++i) {
      if (emitted[i]) continue;
      bool avail = true;
      for (int j = 0; j < m; ++j)
        if (!emitted[j] && ge[j][i]) { avail = false; break; }
      if (!avail) continue;
      if (best < 0 || (alternate ? key_less(best, i) : key_less(i, best)))
        best = i;
    }
    if (best < 0) throw std::logic_error("total_order: cycle in dominance");
    emitted[best] = 1;
    out.push_back(elems[best]);
  }
  return out;
}

// ---- dotted exponent notation ----

inline std::string render_partition(const Partition& la) {
  std::string s;
  int i = 0;
  while (i < la.length()) {
    int part = la.part(i), run = 1;
    while (i + run < la.length() && la.part(i + run) == part) ++run;
    if (part > 9 || run > 9)
      throw std::invalid_argument("render_partition: part or multiplicity exceeds one digit");
    s += std::to_string(part);
    if (run > 1) s += "^" + std::to_string(run);
    i += run;
  }
  return s;
}

inline std::string render_double_partition(const DoublePartition& la) {
  return render_partition(la.first) + "." + render_partition(la.second);
}

inline Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  size_t i = 0;
  while (i < s.size()) {
    if (!std::isdigit((unsigned char)s[i]))
      throw std::invalid_argument("parse_partition: expected digit in '" + s + "'");
    int part = s[i] - '0';
    ++i;
    int rep = 1;
    if (i < s.size() && s[i] == '^') {
      // single-digit multiplicity, so 2^21^2 reads as (2,2,1,1)
      ++i;
      if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
        throw std::invalid_argument("parse_partition: missing exponent in '" + s + "'");
      rep = s[i] - '0';
      ++i;
      if (rep == 0) throw std::invalid_argument("parse_partition: zero exponent");
    }
    for (int k = 0; k < rep; ++k) parts.push_back(part);
  }
  for (size_t j = 0; j + 1 < parts.size(); ++j)
    if (parts[j] < parts[j + 1])
      throw std::invalid_argument("parse_partition: not weakly decreasing: '" + s + "'");
  return Partition(parts);
}

inline DoublePartition parse_double_partition(const std::string& s) {
  size_t dot = s.find('.');
  if (dot == std::string::npos)
    throw std::invalid_argument("parse_double_partition: missing '.' in '" + s + "'");
  if (s.find('.', dot + 1) != std::string::npos)
    throw std::invalid_argument("parse_double_partition: multiple '.' in '" + s + "'");
  return DoublePartition(parse_partition(s.substr(0, dot)),
                         parse_partition(s.substr(dot + 1)));
}

}  // namespace dkostka
