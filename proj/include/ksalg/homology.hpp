#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksalg/algebra.hpp"
#include "ksalg/f2matrix.hpp"

namespace ksalg {

struct GradedComplex {
  AlgebraContext ctx;
  IState x, y;
  std::vector<int> alex2;
  std::map<int, std::vector<BasisElement>> strata;  // maslov -> sorted basis
  // d.at(m) has one row per basis element of C_m holding its image in C_{m-1}
  std::map<int, F2Matrix> d;

  std::size_t dim(int m) const;
  int index_of(int m, const BasisElement& b) const;  // -1 when absent
  BitVec to_vec(int m, const Element& e) const;      // throws unless e lies in C_m
  Element to_element(int m, const BitVec& v) const;
  bool d_squared_zero() const;
};

GradedComplex build_graded_complex(const AlgebraContext& ctx, const IState& x, const IState& y,
                                   const std::vector<int>& alex2);

struct DegreeHomology {
  int maslov = 0;
  std::size_t rank = 0;
  std::vector<Element> reps;  // canonical: reduced against the boundary echelon basis
  EchelonBasis boundaries;
  EchelonBasis classes;  // echelon form of the reps
  EchelonBasis cycles;
};

std::map<int, DegreeHomology> homology_basis(const GradedComplex& c);
// ranks only, skipping representatives
std::map<int, std::size_t> homology_ranks(const GradedComplex& c);

// A graded piece with its homology, for membership and solving questions.
class HomologyPiece {
 public:
  HomologyPiece(const AlgebraContext& ctx, const IState& x, const IState& y, const std::vector<int>& alex2);

  const GradedComplex& complex() const { return c_; }
  const std::map<int, DegreeHomology>& degrees() const { return h_; }
  std::size_t rank(int maslov) const;

  bool is_cycle(const Element& e) const;
  bool is_boundary(const Element& e) const;
  // representative of e's class, reduced modulo boundaries (e must be a cycle of this piece)
  Element canonical(const Element& e) const;
  // xi with d(xi) = target, target in C_m; `order` permutes the elimination of C_{m+1}
  std::optional<Element> solve_boundary(const Element& target, const std::vector<std::size_t>* order = nullptr) const;

 private:
  std::map<int, std::vector<BasisElement>> split_by_maslov(const Element& e) const;
  GradedComplex c_;
  std::map<int, DegreeHomology> h_;
};

struct TheoremClass {
  BasisElement rep;
  int maslov = 0;
  std::vector<int> epsilon;  // one entry per generating interval meeting S
  UMonomial p;
};

// The classes phi(p * prod (C_{i_a} p_a / U_{i_a})^{eps_a}). rep_lines, if given, picks i_a for each
// generating interval meeting S (in interval order); default i_a = min(G_a cap S).
std::vector<TheoremClass> theorem_basis(const AlgebraContext& ctx, const IState& x, const IState& y,
                                        const std::vector<int>& alex2, const std::vector<int>* rep_lines = nullptr);

enum class FactorKind { Generating, LeftEdge, RightEdge, TwoFaced };
std::string factor_kind_name(FactorKind k);

struct SplitFactor {
  FactorKind kind;
  int length = 0;
  int shift = 0;  // global line = local line + shift
  std::uint32_t s_local = 0;
  AlgebraContext ctx;
  IState idempotent;
  std::string describe() const;
};

struct SplitFactors {
  std::vector<int> crossed;
  std::uint32_t crossed_s = 0;  // CL cap S
  std::vector<SplitFactor> factors;
  bool left_placeholder = false;   // no left edge interval: factor F2
  bool right_placeholder = false;  // no right edge interval: factor F2
};

SplitFactors split_factors(const AlgebraContext& ctx, const IState& x, const IState& y);

struct SplittingReport {
  bool ok = true;
  std::size_t pieces = 0;
  std::vector<std::string> failures;
};

// every alex2 with sum <= degree_cap
SplittingReport verify_splitting(const AlgebraContext& ctx, const IState& x, const IState& y, int degree_cap);

// all vectors of length n with nonnegative entries and sum <= cap
std::vector<std::vector<int>> alex2_vectors(int n, int cap);

}  // namespace ksalg
