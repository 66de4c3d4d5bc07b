#include "ksalg/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace ksalg {

std::size_t GradedComplex::dim(int m) const {
  auto it = strata.find(m);
  return it == strata.end() ? 0 : it->second.size();
}

int GradedComplex::index_of(int m, const BasisElement& b) const {
  auto it = strata.find(m);
  if (it == strata.end()) return -1;
  auto p = std::lower_bound(it->second.begin(), it->second.end(), b);
  if (p == it->second.end() || !(*p == b)) return -1;
  return static_cast<int>(p - it->second.begin());
}

BitVec GradedComplex::to_vec(int m, const Element& e) const {
  BitVec v(words_for(dim(m)), 0);
  for (const auto& t : e.terms()) {
    int i = index_of(m, t);
    if (i < 0) throw InvalidArgument("term " + t.to_string() + " is not in this graded piece");
    bit_flip(v, static_cast<std::size_t>(i));
  }
  return v;
}

Element GradedComplex::to_element(int m, const BitVec& v) const {
  std::vector<BasisElement> terms;
  auto it = strata.find(m);
  if (it != strata.end())
    for (std::size_t i = 0; i < it->second.size(); ++i)
      if (bit_get(v, i)) terms.push_back(it->second[i]);
  return Element::from_canonical(ctx, std::move(terms));
}

bool GradedComplex::d_squared_zero() const {
  for (const auto& [m, dm] : d) {
    auto below = d.find(m - 1);
    if (below == d.end()) continue;
    const F2Matrix& dl = below->second;
    for (std::size_t r = 0; r < dm.rows(); ++r) {
      BitVec acc(dl.words(), 0);
      for (std::size_t c = 0; c < dm.cols(); ++c)
        if (dm.get(r, c))
          for (std::size_t w = 0; w < dl.words(); ++w) acc[w] ^= dl.row(c)[w];
      for (auto w : acc)
        if (w) return false;
    }
  }
  return true;
}

GradedComplex build_graded_complex(const AlgebraContext& ctx, const IState& x, const IState& y,
                                   const std::vector<int>& alex2) {
  GradedComplex c;
  c.ctx = ctx;
  c.x = x;
  c.y = y;
  c.alex2 = alex2;
  for (const auto& b : graded_piece_basis(ctx, x, y, alex2)) c.strata[maslov_of(ctx, b)].push_back(b);
  for (auto& [m, basis] : c.strata) std::sort(basis.begin(), basis.end());
  for (const auto& [m, basis] : c.strata) {
    F2Matrix dm(basis.size(), c.dim(m - 1));
    for (std::size_t r = 0; r < basis.size(); ++r) {
      std::uint32_t cs = basis[r].c;
      while (cs) {
        int j = __builtin_ctz(cs);
        cs &= cs - 1;
        BasisElement t = basis[r];
        t.c &= ~(1u << j);
        t.u[j] = static_cast<std::uint16_t>(t.u[j] + 1);
        if (!reduce_term(ctx, t)) continue;
        int col = c.index_of(m - 1, t);
        if (col < 0) throw Error("differential left the graded piece");
        dm.flip(r, static_cast<std::size_t>(col));
      }
    }
    c.d.emplace(m, std::move(dm));
  }
  return c;
}

namespace {

std::vector<BitVec> rows_of(const F2Matrix& m) {
  std::vector<BitVec> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vec(r));
  return out;
}

// kernel of the map whose rows are images of the basis vectors
std::vector<BitVec> kernel_of(const F2Matrix& d, std::size_t src_dim) {
  const std::size_t tgt = d.cols();
  F2Matrix aug(src_dim, tgt + src_dim);
  for (std::size_t r = 0; r < src_dim; ++r) {
    for (std::size_t c = 0; c < tgt; ++c)
      if (d.get(r, c)) aug.set(r, c, true);
    aug.set(r, tgt + r, true);
  }
  auto piv = aug.row_reduce(tgt);
  std::vector<BitVec> out;
  for (std::size_t r = piv.size(); r < src_dim; ++r) {
    BitVec v(words_for(src_dim), 0);
    for (std::size_t j = 0; j < src_dim; ++j)
      if (aug.get(r, tgt + j)) bit_set(v, j);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::map<int, DegreeHomology> homology_basis(const GradedComplex& c) {
  std::map<int, DegreeHomology> out;
  for (const auto& [m, basis] : c.strata) {
    DegreeHomology h;
    h.maslov = m;
    const std::size_t dim = basis.size();
    auto up = c.d.find(m + 1);
    h.boundaries = EchelonBasis::span_of(dim, up == c.d.end() ? std::vector<BitVec>{} : rows_of(up->second));
    auto ker = kernel_of(c.d.at(m), dim);
    h.cycles = EchelonBasis::span_of(dim, ker);
    for (auto& v : ker) h.boundaries.reduce(v);
    h.classes = EchelonBasis::span_of(dim, ker);
    h.rank = h.classes.rank();
    for (const auto& r : h.classes.rows) h.reps.push_back(c.to_element(m, r));
    out.emplace(m, std::move(h));
  }
  return out;
}

std::map<int, std::size_t> homology_ranks(const GradedComplex& c) {
  std::map<int, std::size_t> rk;
  for (const auto& [m, dm] : c.d) rk[m] = dm.rank();
  std::map<int, std::size_t> out;
  for (const auto& [m, basis] : c.strata) {
    std::size_t r = basis.size() - rk[m];
    auto up = rk.find(m + 1);
    if (up != rk.end()) r -= up->second;
    out[m] = r;
  }
  return out;
}

HomologyPiece::HomologyPiece(const AlgebraContext& ctx, const IState& x, const IState& y,
                             const std::vector<int>& alex2)
    : c_(build_graded_complex(ctx, x, y, alex2)), h_(homology_basis(c_)) {}

std::size_t HomologyPiece::rank(int maslov) const {
  auto it = h_.find(maslov);
  return it == h_.end() ? 0 : it->second.rank;
}

std::map<int, std::vector<BasisElement>> HomologyPiece::split_by_maslov(const Element& e) const {
  if (!(e.context() == c_.ctx)) throw ContextMismatch("element from another context");
  std::map<int, std::vector<BasisElement>> parts;
  for (const auto& t : e.terms()) parts[maslov_of(c_.ctx, t)].push_back(t);
  return parts;
}

bool HomologyPiece::is_cycle(const Element& e) const {
  split_by_maslov(e);
  for (const auto& t : e.terms())
    if (!(t.left == c_.x && t.right == c_.y && alex2_of(t) == c_.alex2))
      throw InvalidArgument("term " + t.to_string() + " is not in this graded piece");
  return differential(e).is_zero();
}

Element HomologyPiece::canonical(const Element& e) const {
  Element out(c_.ctx);
  for (auto& [m, terms] : split_by_maslov(e)) {
    BitVec v = c_.to_vec(m, Element::from_canonical(c_.ctx, terms));
    auto it = h_.find(m);
    if (it != h_.end()) it->second.boundaries.reduce(v);
    out += c_.to_element(m, v);
  }
  return out;
}

bool HomologyPiece::is_boundary(const Element& e) const { return is_cycle(e) && canonical(e).is_zero(); }

std::optional<Element> HomologyPiece::solve_boundary(const Element& target, const std::vector<std::size_t>* order) const {
  if (target.is_zero()) return Element(c_.ctx);
  auto parts = split_by_maslov(target);
  if (parts.size() != 1) throw InvalidArgument("target is not homogeneous in maslov degree");
  const int m = parts.begin()->first;
  BitVec t = c_.to_vec(m, target);
  auto up = c_.d.find(m + 1);
  if (up == c_.d.end()) return std::nullopt;
  auto sol = solve_f2(c_.dim(m), rows_of(up->second), t, order);
  if (!sol) return std::nullopt;
  return c_.to_element(m + 1, *sol);
}

std::vector<TheoremClass> theorem_basis(const AlgebraContext& ctx, const IState& x, const IState& y,
                                        const std::vector<int>& alex2, const std::vector<int>* rep_lines) {
  if (ctx.flavor() == Flavor::B0) throw InvalidArgument("the homology basis theorem concerns B(n,k,S) and truncations");
  const int n = ctx.n();
  if (static_cast<int>(alex2.size()) != n) throw InvalidArgument("alex2 must have length n");
  IntervalClassification cl = classify_intervals(x, y);  // throws FarPair
  std::vector<TheoremClass> out;
  if (!ctx.admissible(x) || !ctx.admissible(y)) return out;

  int half[kMaxLines + 1];
  for (int i = 1; i <= n; ++i) {
    int r = alex2[i - 1] - std::abs(weight_at(x, y, i));
    if (r < 0 || (r & 1)) return out;
    half[i] = r / 2;
  }
  std::vector<LineInterval> active;
  std::vector<int> reps;
  for (const auto& g : cl.generating) {
    std::uint32_t meet = g.mask() & ctx.s_mask();
    if (!meet) continue;
    int pick = __builtin_ctz(meet);
    if (rep_lines) {
      pick = rep_lines->at(active.size());
      if (!((meet >> pick) & 1u)) throw InvalidArgument("representative line not in G cap S");
    }
    active.push_back(g);
    reps.push_back(pick);
  }
  const std::size_t na = active.size();
  for (std::uint32_t eps = 0; eps < (1u << na); ++eps) {
    UMonomial p;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      int r = half[i];
      for (std::size_t a = 0; a < na; ++a)
        if (((eps >> a) & 1u) && active[a].contains(i)) --r;
      if (r < 0 || (r > 0 && ctx.in_s(i))) ok = false;
      else p[i] = static_cast<std::uint16_t>(r);
    }
    for (std::size_t g = 0; g < cl.generating.size() && ok; ++g)
      if (p.divisible_by_mask(cl.generating[g].mask())) ok = false;
    if (!ok) continue;
    TheoremClass tc;
    tc.p = p;
    tc.rep.left = x;
    tc.rep.right = y;
    tc.rep.u = p;
    for (std::size_t a = 0; a < na; ++a) {
      tc.epsilon.push_back((eps >> a) & 1u);
      if (!((eps >> a) & 1u)) continue;
      for (int i = active[a].first; i <= active[a].last; ++i)
        if (i != reps[a]) tc.rep.u[i] = static_cast<std::uint16_t>(tc.rep.u[i] + 1);
      tc.rep.c |= 1u << reps[a];
    }
    tc.maslov = maslov_of(ctx, tc.rep);
    out.push_back(tc);
  }
  return out;
}

std::string factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Generating: return "generating";
    case FactorKind::LeftEdge: return "left_edge";
    case FactorKind::RightEdge: return "right_edge";
    case FactorKind::TwoFaced: return "two_faced";
  }
  return "?";
}

std::string SplitFactor::describe() const {
  return factor_kind_name(kind) + " l=" + std::to_string(length) + " shift=" + std::to_string(shift) +
         " S=" + s_to_string(s_local) + " " + ctx.to_string() + " at " + idempotent.to_string();
}

namespace {

std::uint32_t local_s(const AlgebraContext& ctx, int first, int last, int shift) {
  std::uint32_t s = 0;
  for (int i = first; i <= last; ++i)
    if (ctx.in_s(i)) s |= 1u << (i - shift);
  return s;
}

IState interval_state(int width, int lo, int hi) {
  std::uint32_t b = 0;
  for (int c = lo; c <= hi; ++c) b |= 1u << c;
  return IState(width, b);
}

}  // namespace

SplitFactors split_factors(const AlgebraContext& ctx, const IState& x, const IState& y) {
  IntervalClassification cl = classify_intervals(x, y);
  SplitFactors sf;
  sf.crossed = cl.crossed;
  for (int i : cl.crossed)
    if (ctx.in_s(i)) sf.crossed_s |= 1u << i;
  const int n = ctx.n();
  if (cl.two_faced) {
    SplitFactor f{FactorKind::TwoFaced, n + 1, 0, ctx.s_mask(), AlgebraContext::make(n, n + 1, ctx.s_mask()),
                  interval_state(n, 0, n)};
    sf.factors.push_back(f);
    return sf;
  }
  if (cl.left_edge) {
    int l = cl.left_edge->length;
    std::uint32_t s = local_s(ctx, 1, l, 0);
    sf.factors.push_back({FactorKind::LeftEdge, l, 0, s, AlgebraContext::make(l, l, s), interval_state(l, 0, l - 1)});
  } else {
    sf.left_placeholder = true;
  }
  for (const auto& g : cl.generating) {
    int l = g.length(), j = g.first - 1;
    std::uint32_t s = local_s(ctx, g.first, g.last, j);
    sf.factors.push_back(
        {FactorKind::Generating, l, j, s, AlgebraContext::make(l, l - 1, s), interval_state(l, 1, l - 1)});
  }
  if (cl.right_edge) {
    int l = cl.right_edge->length;
    std::uint32_t s = local_s(ctx, n - l + 1, n, n - l);
    sf.factors.push_back(
        {FactorKind::RightEdge, l, n - l, s, AlgebraContext::make(l, l, s), interval_state(l, 1, l)});
  } else {
    sf.right_placeholder = true;
  }
  return sf;
}

std::vector<std::vector<int>> alex2_vectors(int n, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, cap);
  return out;
}

namespace {

using DegreeTable = std::map<int, std::pair<std::size_t, std::size_t>>;  // maslov -> (chain dim, homology rank)

DegreeTable table_of(const GradedComplex& c) {
  DegreeTable t;
  auto rk = homology_ranks(c);
  for (const auto& [m, b] : c.strata) t[m] = {b.size(), rk[m]};
  return t;
}

DegreeTable convolve(const DegreeTable& a, const DegreeTable& b) {
  DegreeTable out;
  for (const auto& [ma, da] : a)
    for (const auto& [mb, db] : b) {
      auto& slot = out[ma + mb];
      slot.first += da.first * db.first;
      slot.second += da.second * db.second;
    }
  return out;
}

void drop_zeros(DegreeTable& t) {
  for (auto it = t.begin(); it != t.end();)
    it = (it->second.first == 0 && it->second.second == 0) ? t.erase(it) : std::next(it);
}

// one crossed line: F2[U] (line not in S) or F2[U,C]/(C^2), dC = U (line in S); w(1) = 1/2
DegreeTable crossed_line(bool in_s, int a2) {
  DegreeTable t;
  if (a2 < 1 || !(a2 & 1)) return t;
  int tdeg = (a2 - 1) / 2;
  if (!in_s) {
    t[0] = {1, 1};
    return t;
  }
  // U^t at maslov -1-2t; C U^(t-1) at -2t, mapping onto U^t
  t[-1 - 2 * tdeg] = {1, tdeg == 0 ? 1 : 0};
  if (tdeg >= 1) t[-2 * tdeg] = {1, 0};
  return t;
}

}  // namespace

SplittingReport verify_splitting(const AlgebraContext& ctx, const IState& x, const IState& y, int degree_cap) {
  SplittingReport rep;
  SplitFactors sf = split_factors(ctx, x, y);
  std::map<std::tuple<int, int, std::uint32_t, std::vector<int>>, DegreeTable> cache;
  const int n = ctx.n();
  for (const auto& a2 : alex2_vectors(n, degree_cap)) {
    ++rep.pieces;
    DegreeTable full = table_of(build_graded_complex(ctx, x, y, a2));
    DegreeTable prod;
    prod[0] = {1, 1};
    for (int i : sf.crossed) prod = convolve(prod, crossed_line(ctx.in_s(i), a2[i - 1]));
    for (const auto& f : sf.factors) {
      int lines = std::min(f.length, f.ctx.n());
      std::vector<int> local(a2.begin() + f.shift, a2.begin() + f.shift + lines);
      auto key = std::make_tuple(static_cast<int>(f.kind), f.length, f.s_local, local);
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, table_of(build_graded_complex(f.ctx, f.idempotent, f.idempotent, local))).first;
      prod = convolve(prod, it->second);
    }
    drop_zeros(full);
    drop_zeros(prod);
    if (full != prod) {
      rep.ok = false;
      std::string s = "alex2=(";
      for (std::size_t i = 0; i < a2.size(); ++i) s += (i ? "," : "") + std::to_string(a2[i]);
      s += ") " + x.to_string() + "->" + y.to_string() + ": direct";
      for (const auto& [m, d] : full) s += " [" + std::to_string(m) + ":" + std::to_string(d.first) + "/" + std::to_string(d.second) + "]";
      s += " vs factors";
      for (const auto& [m, d] : prod) s += " [" + std::to_string(m) + ":" + std::to_string(d.first) + "/" + std::to_string(d.second) + "]";
      rep.failures.push_back(s);
    }
  }
  return rep;
}

}  // namespace ksalg
