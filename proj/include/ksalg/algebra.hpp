#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ksalg/istates.hpp"

namespace ksalg {

enum class Flavor { B0, B, Br, Bl, Bprime };

std::string flavor_name(Flavor f);  // "b0", "b", "br", "bl", "bprime"
Flavor parse_flavor(std::string_view s);

class AlgebraContext {
 public:
  AlgebraContext() = default;
  // S as a bitmask, bit i for line i
  static AlgebraContext make(int n, int k, std::uint32_t s_mask, Flavor flavor = Flavor::B);
  static AlgebraContext make(int n, int k, const std::vector<int>& s, Flavor flavor = Flavor::B);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint32_t s_mask() const { return s_; }
  bool in_s(int i) const { return (s_ >> i) & 1u; }
  std::vector<int> s_list() const;
  Flavor flavor() const { return flavor_; }

  bool admissible(const IState& x) const;
  // admissible I-states, lexicographic
  std::vector<IState> states() const;
  std::string to_string() const;  // e.g. "B'(4,2,{1,4})"

  bool operator==(const AlgebraContext&) const = default;

 private:
  int n_ = 1;
  int k_ = 0;
  std::uint32_t s_ = 0;
  Flavor flavor_ = Flavor::B;
};

std::string s_to_string(std::uint32_t s_mask);  // "{1,3}"

struct BasisElement {
  IState left;
  IState right;
  UMonomial u;
  std::uint32_t c = 0;  // bit i for C_i

  auto operator<=>(const BasisElement&) const = default;
  bool operator==(const BasisElement&) const = default;
  std::string to_string() const;
};

// Brings a term to canonical form for the flavor. Returns false when it is zero.
bool reduce_term(const AlgebraContext& ctx, const BasisElement& b);

class Element {
 public:
  Element() = default;
  explicit Element(const AlgebraContext& ctx) : ctx_(ctx) {}
  // reduces every term and cancels repeats mod 2
  static Element from_terms(const AlgebraContext& ctx, std::vector<BasisElement> terms);
  // terms already canonical for ctx; only sorts and cancels
  static Element from_canonical(const AlgebraContext& ctx, std::vector<BasisElement> terms);

  const AlgebraContext& context() const { return ctx_; }
  const std::vector<BasisElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  Element& operator+=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  bool operator==(const Element& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

 private:
  AlgebraContext ctx_;
  std::vector<BasisElement> terms_;  // sorted, distinct, canonical
};

Element parse_element(const AlgebraContext& ctx, std::string_view text);

enum class Gen { R, L, U, C };

Element gen_f(const AlgebraContext& ctx, const IState& x, const IState& y);
Element gen_idempotent(const AlgebraContext& ctx, const IState& x);
Element gen_sum(const AlgebraContext& ctx, Gen kind, int i);
Element unit(const AlgebraContext& ctx);
Element from_basis(const AlgebraContext& ctx, const BasisElement& b);

Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
Element differential(const Element& a);
// product of two basis elements; false when it vanishes
bool multiply_terms(const AlgebraContext& ctx, const BasisElement& a, const BasisElement& b, BasisElement& out);

struct GradingVector {
  int maslov = 0;
  std::vector<int> alex2;      // twice the refined multidegree
  std::vector<int> unrefined;  // tau_1, beta_1, ..., tau_n, beta_n
  int alex_single2 = 0;
  bool operator==(const GradingVector&) const = default;
};

GradingVector grading(const AlgebraContext& ctx, const BasisElement& b);
int maslov_of(const AlgebraContext& ctx, const BasisElement& b);
std::vector<int> alex2_of(const BasisElement& b);

std::vector<BasisElement> graded_piece_basis(const AlgebraContext& ctx, const IState& x, const IState& y,
                                             const std::vector<int>& alex2);

}  // namespace ksalg
