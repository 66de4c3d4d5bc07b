#include "ksalg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace ksalg {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::B0: return "b0";
    case Flavor::B: return "b";
    case Flavor::Br: return "br";
    case Flavor::Bl: return "bl";
    case Flavor::Bprime: return "bprime";
  }
  return "?";
}

Flavor parse_flavor(std::string_view s) {
  if (s == "b0") return Flavor::B0;
  if (s == "b") return Flavor::B;
  if (s == "br") return Flavor::Br;
  if (s == "bl") return Flavor::Bl;
  if (s == "bprime") return Flavor::Bprime;
  throw InvalidArgument("unknown flavor '" + std::string(s) + "'");
}

AlgebraContext AlgebraContext::make(int n, int k, std::uint32_t s_mask, Flavor flavor) {
  if (n < 1 || n > kMaxLines) throw InvalidArgument("n out of range: " + std::to_string(n));
  if (k < 0 || k > n + 1) throw InvalidArgument("k out of range: " + std::to_string(k));
  std::uint32_t allowed = 0;
  for (int i = 1; i <= n; ++i) allowed |= 1u << i;
  if (s_mask & ~allowed) throw InvalidArgument("S must be a subset of [1,n]");
  if (flavor == Flavor::B0 && s_mask) throw InvalidArgument("B0 carries no C variables (S must be empty)");
  AlgebraContext c;
  c.n_ = n;
  c.k_ = k;
  c.s_ = s_mask;
  c.flavor_ = flavor;
  return c;
}

AlgebraContext AlgebraContext::make(int n, int k, const std::vector<int>& s, Flavor flavor) {
  std::uint32_t m = 0;
  for (int i : s) {
    if (i < 1 || i > n) throw InvalidArgument("S must be a subset of [1,n]");
    m |= 1u << i;
  }
  return make(n, k, m, flavor);
}

std::vector<int> AlgebraContext::s_list() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (in_s(i)) out.push_back(i);
  return out;
}

bool AlgebraContext::admissible(const IState& x) const {
  if (x.width() != n_ || x.size() != k_) return false;
  switch (flavor_) {
    case Flavor::Br: return !x.contains(0);
    case Flavor::Bl: return !x.contains(n_);
    case Flavor::Bprime: return !x.contains(0) && !x.contains(n_);
    default: return true;
  }
}

std::vector<IState> AlgebraContext::states() const {
  std::vector<IState> out;
  for (const auto& x : enumerate_istates(n_, k_))
    if (admissible(x)) out.push_back(x);
  return out;
}

std::string s_to_string(std::uint32_t s_mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 1; i < 32; ++i) {
    if (!((s_mask >> i) & 1u)) continue;
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::string AlgebraContext::to_string() const {
  static const char* names[] = {"B0", "B", "Br", "Bl", "B'"};
  std::string s = names[static_cast<int>(flavor_)];
  s += "(" + std::to_string(n_) + "," + std::to_string(k_);
  if (flavor_ != Flavor::B0) s += "," + s_to_string(s_);
  return s + ")";
}

std::string BasisElement::to_string() const {
  std::string s;
  for (int i = 1; i < 32; ++i)
    if ((c >> i) & 1u) s += "C" + std::to_string(i) + "*";
  for (int i = 1; i <= kMaxLines; ++i)
    if (u[i]) s += "U" + std::to_string(i) + "^" + std::to_string(u[i]) + "*";
  s += "f[" + left.to_string() + "," + right.to_string() + "]";
  return s;
}

bool reduce_term(const AlgebraContext& ctx, const BasisElement& b) {
  if (ctx.flavor() == Flavor::B0) return true;
  if (is_far(b.left, b.right)) return false;
  std::array<std::uint32_t, kMaxLines> masks;
  int cnt = generating_masks(b.left, b.right, masks);
  for (int a = 0; a < cnt; ++a)
    if (b.u.divisible_by_mask(masks[a])) return false;
  return true;
}

namespace {

// sort, then drop pairs of equal terms
void cancel_mod2(std::vector<BasisElement>& v) {
  std::sort(v.begin(), v.end());
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    std::size_t e = r;
    while (e < v.size() && v[e] == v[r]) ++e;
    if ((e - r) & 1u) v[w++] = v[r];
    r = e;
  }
  v.resize(w);
}

void check_term_context(const AlgebraContext& ctx, const BasisElement& b) {
  if (!ctx.admissible(b.left) || !ctx.admissible(b.right))
    throw InvalidArgument("I-state not admissible in " + ctx.to_string());
  if (b.c & ~ctx.s_mask()) throw InvalidArgument("C index outside S in " + ctx.to_string());
  for (int i = ctx.n() + 1; i <= kMaxLines; ++i)
    if (b.u[i]) throw InvalidArgument("U index outside [1,n]");
}

}  // namespace

Element Element::from_terms(const AlgebraContext& ctx, std::vector<BasisElement> terms) {
  Element e(ctx);
  std::vector<BasisElement> keep;
  keep.reserve(terms.size());
  for (auto& t : terms) {
    check_term_context(ctx, t);
    if (reduce_term(ctx, t)) keep.push_back(t);
  }
  cancel_mod2(keep);
  e.terms_ = std::move(keep);
  return e;
}

Element Element::from_canonical(const AlgebraContext& ctx, std::vector<BasisElement> terms) {
  Element e(ctx);
  cancel_mod2(terms);
  e.terms_ = std::move(terms);
  return e;
}

Element& Element::operator+=(const Element& o) {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("adding elements of " + ctx_.to_string() + " and " + o.ctx_.to_string());
  std::vector<BasisElement> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> parts;
  parts.reserve(terms_.size());
  for (const auto& t : terms_) parts.push_back(t.to_string());
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (a) s += '+';
    s += parts[a];
  }
  return s;
}

namespace {

struct Parser {
  const AlgebraContext& ctx;
  std::string_view t;
  std::size_t p = 0;

  [[noreturn]] void fail(const std::string& why) const { throw ParseError(p, why); }
  bool eat(char ch) {
    if (p < t.size() && t[p] == ch) {
      ++p;
      return true;
    }
    return false;
  }
  int number() {
    if (p >= t.size() || !std::isdigit(static_cast<unsigned char>(t[p]))) fail("expected number");
    long v = 0;
    while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) {
      v = v * 10 + (t[p] - '0');
      if (v > 60000) fail("number too large");
      ++p;
    }
    return static_cast<int>(v);
  }
  IState state() {
    std::size_t start = p;
    if (!eat('{')) fail("expected '{'");
    while (p < t.size() && t[p] != '}') ++p;
    if (!eat('}')) fail("unterminated I-state");
    try {
      return IState::parse(t.substr(start, p - start), ctx.n());
    } catch (const ParseError& e) {
      throw ParseError(start + e.position, "bad I-state");
    }
  }
  bool dead = false;
  BasisElement term() {
    BasisElement b;
    dead = false;
    while (true) {
      if (p >= t.size()) fail("unexpected end of input");
      char ch = t[p];
      if (ch == 'C') {
        ++p;
        std::size_t at = p;
        int i = number();
        if (i < 1 || i > ctx.n() || !ctx.in_s(i)) {
          p = at;
          fail("C index not in S");
        }
        if ((b.c >> i) & 1u) dead = true;  // C_i^2 = 0
        b.c |= 1u << i;
      } else if (ch == 'U') {
        ++p;
        std::size_t at = p;
        int i = number();
        if (i < 1 || i > ctx.n()) {
          p = at;
          fail("U index out of range");
        }
        int r = 1;
        if (eat('^')) r = number();
        if (b.u[i] + r > 60000) fail("exponent too large");
        b.u[i] = static_cast<std::uint16_t>(b.u[i] + r);
      } else if (ch == 'f') {
        ++p;
        if (!eat('[')) fail("expected '['");
        b.left = state();
        if (!eat(',')) fail("expected ','");
        b.right = state();
        if (!eat(']')) fail("expected ']'");
        if (b.left.size() != ctx.k() || b.right.size() != ctx.k()) fail("I-state size differs from k");
        if (!ctx.admissible(b.left) || !ctx.admissible(b.right)) fail("I-state not admissible for flavor");
        return b;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      if (!eat('*')) fail("expected '*'");
    }
  }
};

}  // namespace

Element parse_element(const AlgebraContext& ctx, std::string_view text) {
  if (text == "0") return Element(ctx);
  Parser ps{ctx, text};
  std::vector<BasisElement> terms;
  while (true) {
    BasisElement b = ps.term();
    if (!ps.dead) terms.push_back(b);
    if (ps.p == text.size()) break;
    if (!ps.eat('+')) ps.fail("expected '+'");
  }
  return Element::from_terms(ctx, std::move(terms));
}

Element from_basis(const AlgebraContext& ctx, const BasisElement& b) { return Element::from_terms(ctx, {b}); }

Element gen_f(const AlgebraContext& ctx, const IState& x, const IState& y) {
  if (!ctx.admissible(x) || !ctx.admissible(y))
    throw InvalidArgument("I-state not admissible in " + ctx.to_string());
  BasisElement b;
  b.left = x;
  b.right = y;
  return Element::from_terms(ctx, {b});
}

Element gen_idempotent(const AlgebraContext& ctx, const IState& x) { return gen_f(ctx, x, x); }

Element gen_sum(const AlgebraContext& ctx, Gen kind, int i) {
  if (i < 1 || i > ctx.n()) throw InvalidArgument("generator index out of range");
  if (kind == Gen::C && !ctx.in_s(i)) throw InvalidArgument("C_" + std::to_string(i) + " requires i in S");
  std::vector<BasisElement> terms;
  for (const auto& x : ctx.states()) {
    BasisElement b;
    b.left = x;
    switch (kind) {
      case Gen::R:
        if (!x.contains(i - 1) || x.contains(i)) continue;
        b.right = x.with_moved(i - 1, i);
        break;
      case Gen::L:
        if (!x.contains(i) || x.contains(i - 1)) continue;
        b.right = x.with_moved(i, i - 1);
        break;
      case Gen::U:
        b.right = x;
        b.u[i] = 1;
        break;
      case Gen::C:
        b.right = x;
        b.c = 1u << i;
        break;
    }
    if (!ctx.admissible(b.right)) continue;
    terms.push_back(b);
  }
  return Element::from_terms(ctx, std::move(terms));
}

Element unit(const AlgebraContext& ctx) {
  std::vector<BasisElement> terms;
  for (const auto& x : ctx.states()) {
    BasisElement b;
    b.left = b.right = x;
    terms.push_back(b);
  }
  return Element::from_terms(ctx, std::move(terms));
}

bool multiply_terms(const AlgebraContext& ctx, const BasisElement& s, const BasisElement& t, BasisElement& p) {
  if (!(s.right == t.left) || (s.c & t.c)) return false;
  p = BasisElement{};
  p.left = s.left;
  p.right = t.right;
  p.c = s.c | t.c;
  for (int i = 1; i <= ctx.n(); ++i) {
    int d = std::abs(weight_at(s.right, t.right, i)) - std::abs(weight_at(s.left, t.right, i)) +
            std::abs(weight_at(s.left, s.right, i));
    p.u[i] = static_cast<std::uint16_t>(s.u[i] + t.u[i] + d / 2);
  }
  return reduce_term(ctx, p);
}

Element multiply(const Element& a, const Element& b) {
  if (!(a.context() == b.context()))
    throw ContextMismatch("multiplying elements of " + a.context().to_string() + " and " + b.context().to_string());
  const AlgebraContext& ctx = a.context();
  std::vector<BasisElement> out;
  const auto& bt = b.terms();
  for (const auto& s : a.terms()) {
    // terms of b are sorted with left state first
    auto lo = std::lower_bound(bt.begin(), bt.end(), s.right,
                               [](const BasisElement& e, const IState& x) { return e.left < x; });
    for (auto it = lo; it != bt.end() && it->left == s.right; ++it) {
      BasisElement p;
      if (multiply_terms(ctx, s, *it, p)) out.push_back(p);
    }
  }
  return Element::from_canonical(ctx, std::move(out));
}

Element differential(const Element& a) {
  const AlgebraContext& ctx = a.context();
  std::vector<BasisElement> out;
  for (const auto& t : a.terms()) {
    std::uint32_t c = t.c;
    while (c) {
      int j = __builtin_ctz(c);
      c &= c - 1;
      BasisElement d = t;
      d.c &= ~(1u << j);
      d.u[j] = static_cast<std::uint16_t>(d.u[j] + 1);
      if (reduce_term(ctx, d)) out.push_back(d);
    }
  }
  return Element::from_canonical(ctx, std::move(out));
}

std::vector<int> alex2_of(const BasisElement& b) {
  const int n = b.left.width();
  std::vector<int> a(n);
  for (int i = 1; i <= n; ++i)
    a[i - 1] = 2 * b.u[i] + std::abs(weight_at(b.left, b.right, i)) + (((b.c >> i) & 1u) ? 2 : 0);
  return a;
}

int maslov_of(const AlgebraContext& ctx, const BasisElement& b) {
  int m = __builtin_popcount(b.c);
  for (int i = 1; i <= ctx.n(); ++i) {
    if (!ctx.in_s(i)) continue;
    m -= 2 * b.u[i] + std::abs(weight_at(b.left, b.right, i)) + (((b.c >> i) & 1u) ? 2 : 0);
  }
  return m;
}

GradingVector grading(const AlgebraContext& ctx, const BasisElement& b) {
  const int n = ctx.n();
  GradingVector g;
  g.alex2 = alex2_of(b);
  g.maslov = maslov_of(ctx, b);
  g.unrefined.assign(2 * n, 0);
  for (const Move& mv : canonical_moves(b.left, b.right)) g.unrefined[2 * (mv.line - 1) + (mv.right ? 0 : 1)] += 1;
  for (int i = 1; i <= n; ++i) {
    int loops = b.u[i] + (((b.c >> i) & 1u) ? 1 : 0);
    g.unrefined[2 * (i - 1)] += loops;
    g.unrefined[2 * (i - 1) + 1] += loops;
    g.alex_single2 += ctx.in_s(i) ? -g.alex2[i - 1] : g.alex2[i - 1];
  }
  return g;
}

std::vector<BasisElement> graded_piece_basis(const AlgebraContext& ctx, const IState& x, const IState& y,
                                             const std::vector<int>& alex2) {
  std::vector<BasisElement> out;
  const int n = ctx.n();
  if (static_cast<int>(alex2.size()) != n) throw InvalidArgument("alex2 must have length n");
  if (!ctx.admissible(x) || !ctx.admissible(y)) return out;
  if (ctx.flavor() != Flavor::B0 && is_far(x, y)) return out;
  int base[kMaxLines + 1];
  for (int i = 1; i <= n; ++i) {
    base[i] = alex2[i - 1] - std::abs(weight_at(x, y, i));
    if (base[i] < 0 || (base[i] & 1)) return out;
  }
  std::array<std::uint32_t, kMaxLines> masks;
  int cnt = ctx.flavor() == Flavor::B0 ? 0 : generating_masks(x, y, masks);
  const std::uint32_t s = ctx.s_mask();
  // every submask of S, in increasing order
  std::uint32_t c = 0;
  while (true) {
    BasisElement b;
    b.left = x;
    b.right = y;
    b.c = c;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      int r = base[i] / 2 - (((c >> i) & 1u) ? 1 : 0);
      if (r < 0) ok = false;
      else b.u[i] = static_cast<std::uint16_t>(r);
    }
    for (int a = 0; a < cnt && ok; ++a)
      if (b.u.divisible_by_mask(masks[a])) ok = false;
    if (ok) out.push_back(b);
    if (c == s) break;
    c = (c - s) & s;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ksalg
