#include "ksalg/istates.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace ksalg {

ParseError::ParseError(std::size_t pos, const std::string& what)
    : Error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}

IState::IState(int n, std::uint32_t bits) {
  if (n < 1 || n > kMaxLines) throw InvalidArgument("width out of range: " + std::to_string(n));
  if (n < 31 && (bits >> (n + 1)) != 0) throw InvalidArgument("I-state member outside [0,n]");
  n_ = static_cast<std::uint8_t>(n);
  bits_ = bits;
}

IState IState::from_members(int n, const std::vector<int>& members) {
  std::uint32_t b = 0;
  int prev = -1;
  for (int m : members) {
    if (m <= prev) throw InvalidArgument("I-state members must be strictly increasing");
    if (m < 0 || m > n) throw InvalidArgument("I-state member " + std::to_string(m) + " outside [0,n]");
    b |= 1u << m;
    prev = m;
  }
  return IState(n, b);
}

IState IState::parse(std::string_view text, int n) {
  std::size_t p = 0;
  auto fail = [&](const std::string& why) { throw ParseError(p, why); };
  if (p >= text.size() || text[p] != '{') fail("expected '{'");
  ++p;
  std::vector<int> mem;
  if (p < text.size() && text[p] == '}') {
    ++p;
  } else {
    while (true) {
      if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p]))) fail("expected digit");
      int v = 0;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
        v = v * 10 + (text[p] - '0');
        if (v > 1000) fail("number too large");
        ++p;
      }
      if (v > n) fail("member exceeds n");
      if (!mem.empty() && v <= mem.back()) fail("members not increasing");
      mem.push_back(v);
      if (p < text.size() && text[p] == ',') {
        ++p;
        continue;
      }
      if (p < text.size() && text[p] == '}') {
        ++p;
        break;
      }
      fail("expected ',' or '}'");
    }
  }
  if (p != text.size()) fail("trailing characters");
  return from_members(n, mem);
}

std::vector<int> IState::members() const {
  std::vector<int> out;
  for (int c = 0; c <= n_; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string IState::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int c = 0; c <= n_; ++c) {
    if (!contains(c)) continue;
    if (!first) s += ',';
    s += std::to_string(c);
    first = false;
  }
  s += '}';
  return s;
}

IState IState::with_moved(int from, int to) const {
  IState r = *this;
  r.bits_ = (bits_ & ~(1u << from)) | (1u << to);
  return r;
}

std::strong_ordering IState::operator<=>(const IState& o) const {
  if (n_ != o.n_) return n_ <=> o.n_;
  int ka = size(), kb = o.size();
  if (ka != kb) return ka <=> kb;
  if (bits_ == o.bits_) return std::strong_ordering::equal;
  std::uint32_t d = bits_ ^ o.bits_;
  std::uint32_t low = d & (~d + 1);
  // the set holding the lowest differing coordinate is lexicographically first
  return (bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<IState> enumerate_istates(int n, int k) {
  if (n < 1 || n > kMaxLines) throw InvalidArgument("width out of range: " + std::to_string(n));
  if (k < 0 || k > n + 1) throw InvalidArgument("size out of range: " + std::to_string(k));
  std::vector<IState> out;
  std::vector<int> idx(k);
  for (int a = 0; a < k; ++a) idx[a] = a;
  while (true) {
    out.push_back(IState::from_members(n, idx));
    int a = k - 1;
    while (a >= 0 && idx[a] == n - (k - 1 - a)) --a;
    if (a < 0) break;
    ++idx[a];
    for (int b = a + 1; b < k; ++b) idx[b] = idx[b - 1] + 1;
  }
  return out;
}

namespace {
void check_shared(const IState& x, const IState& y) {
  if (x.width() != y.width() || x.size() != y.size())
    throw InvalidArgument("I-states " + x.to_string() + " and " + y.to_string() + " have different (n,k)");
}
inline std::uint32_t from_mask(int i) { return ~((1u << i) - 1u); }
}  // namespace

int weight_at(const IState& x, const IState& y, int line) {
  std::uint32_t m = from_mask(line);
  return __builtin_popcount(y.bits() & m) - __builtin_popcount(x.bits() & m);
}

WeightVector weight_vector(const IState& x, const IState& y) {
  check_shared(x, y);
  WeightVector w;
  w.entries.resize(x.width());
  for (int i = 1; i <= x.width(); ++i) w.entries[i - 1] = weight_at(x, y, i);
  return w;
}

int subadditivity_defect(const IState& x, const IState& y, const IState& z, int line) {
  check_shared(x, y);
  check_shared(y, z);
  if (line < 1 || line > x.width()) throw InvalidArgument("line index out of range");
  return std::abs(weight_at(y, z, line)) - std::abs(weight_at(x, z, line)) + std::abs(weight_at(x, y, line));
}

bool is_far(const IState& x, const IState& y) {
  check_shared(x, y);
  std::uint32_t a = x.bits(), b = y.bits();
  while (a) {
    int xa = __builtin_ctz(a), ya = __builtin_ctz(b);
    if (xa - ya > 1 || ya - xa > 1) return true;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

std::uint32_t LineInterval::mask() const {
  std::uint32_t m = 0;
  for (int i = first; i <= last; ++i) m |= 1u << i;
  return m;
}

std::uint32_t IntervalClassification::crossed_mask() const {
  std::uint32_t m = 0;
  for (int i : crossed) m |= 1u << i;
  return m;
}

// Lines between consecutive not-fully-used coordinates carry a constant weight, so each
// such window is entirely crossed or is a generating interval.
int generating_masks(const IState& x, const IState& y, std::array<std::uint32_t, kMaxLines>& out) {
  const int n = x.width();
  const std::uint32_t full = x.bits() & y.bits();
  int count = 0;
  int prev = -1;
  for (int t = 0; t <= n; ++t) {
    if ((full >> t) & 1u) continue;
    if (prev >= 0 && weight_at(x, y, t) == 0) {
      std::uint32_t m = 0;
      for (int i = prev + 1; i <= t; ++i) m |= 1u << i;
      out[count++] = m;
    }
    prev = t;
  }
  return count;
}

IntervalClassification classify_intervals(const IState& x, const IState& y) {
  if (is_far(x, y)) throw FarPair("I-states " + x.to_string() + " and " + y.to_string() + " are far");
  const int n = x.width();
  const std::uint32_t full = x.bits() & y.bits();
  IntervalClassification c;
  for (int i = 1; i <= n; ++i)
    if (weight_at(x, y, i) != 0) c.crossed.push_back(i);

  std::vector<int> nfu;
  for (int t = 0; t <= n; ++t)
    if (!((full >> t) & 1u)) nfu.push_back(t);

  if (nfu.empty()) {
    c.two_faced = EdgeInterval{LineInterval{1, n}, n + 1};
    return c;
  }
  if (nfu.front() > 0) c.left_edge = EdgeInterval{LineInterval{1, nfu.front()}, nfu.front()};
  if (nfu.back() < n) c.right_edge = EdgeInterval{LineInterval{nfu.back() + 1, n}, n - nfu.back()};
  for (std::size_t a = 0; a + 1 < nfu.size(); ++a) {
    int j = nfu[a], e = nfu[a + 1];
    if (weight_at(x, y, e) == 0) c.generating.push_back(LineInterval{j + 1, e});
  }
  return c;
}

int UMonomial::degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool UMonomial::divisible_by_mask(std::uint32_t mask) const {
  while (mask) {
    int i = __builtin_ctz(mask);
    if (exps[i - 1] == 0) return false;
    mask &= mask - 1;
  }
  return true;
}

UMonomial interval_monomial(const LineInterval& g) {
  if (g.first < 1 || g.last > kMaxLines || g.length() < 1) throw InvalidArgument("bad interval");
  UMonomial m;
  for (int i = g.first; i <= g.last; ++i) m[i] = 1;
  return m;
}

std::vector<Move> canonical_moves(const IState& x, const IState& y) {
  check_shared(x, y);
  std::vector<Move> out;
  std::vector<int> cur = x.members();
  const std::vector<int> tgt = y.members();
  const int k = static_cast<int>(cur.size());
  while (cur != tgt) {
    int a = -1;
    for (int b = k - 1; b >= 0; --b)
      if (cur[b] < tgt[b]) {
        a = b;
        break;
      }
    if (a >= 0) {
      for (int i = cur[a] + 1; i <= tgt[a]; ++i) out.push_back({true, i});
      cur[a] = tgt[a];
      continue;
    }
    for (int b = 0; b < k; ++b)
      if (cur[b] > tgt[b]) {
        a = b;
        break;
      }
    for (int i = cur[a]; i >= tgt[a] + 1; --i) out.push_back({false, i});
    cur[a] = tgt[a];
  }
  return out;
}

}  // namespace ksalg
