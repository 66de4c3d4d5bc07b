#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ksalg {

// lines are 1..n, coordinates 0..n
inline constexpr int kMaxLines = 16;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FarPair : Error {
  using Error::Error;
};
struct ContextMismatch : Error {
  using Error::Error;
};
struct InvalidArgument : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(std::size_t pos, const std::string& what);
  std::size_t position;
};

class IState {
 public:
  IState() = default;
  IState(int n, std::uint32_t bits);

  static IState from_members(int n, const std::vector<int>& members);
  // "{0,2,5}"
  static IState parse(std::string_view text, int n);

  int width() const { return n_; }
  int size() const { return __builtin_popcount(bits_); }
  std::uint32_t bits() const { return bits_; }
  bool contains(int c) const { return c >= 0 && c <= n_ && ((bits_ >> c) & 1u); }
  std::vector<int> members() const;
  std::string to_string() const;

  IState with_moved(int from, int to) const;

  bool operator==(const IState& o) const = default;
  // lexicographic on the member sequence; only meaningful for equal (n,k)
  std::strong_ordering operator<=>(const IState& o) const;

 private:
  std::uint8_t n_ = 0;
  std::uint32_t bits_ = 0;
};

std::vector<IState> enumerate_istates(int n, int k);

struct WeightVector {
  std::vector<int> entries;  // entries[i-1] = v_i
  int at(int line) const { return entries.at(line - 1); }
  bool operator==(const WeightVector&) const = default;
};

WeightVector weight_vector(const IState& x, const IState& y);
// v_i without allocation
int weight_at(const IState& x, const IState& y, int line);
int subadditivity_defect(const IState& x, const IState& y, const IState& z, int line);
bool is_far(const IState& x, const IState& y);

struct LineInterval {
  int first = 1;
  int last = 0;
  int length() const { return last - first + 1; }
  std::uint32_t mask() const;  // bit i set for line i
  bool contains(int i) const { return i >= first && i <= last; }
  bool operator==(const LineInterval&) const = default;
};

struct EdgeInterval {
  LineInterval lines;
  int length = 0;  // n+1 for the two-faced interval
  bool operator==(const EdgeInterval&) const = default;
};

struct IntervalClassification {
  std::vector<int> crossed;
  std::vector<LineInterval> generating;
  std::optional<EdgeInterval> left_edge;
  std::optional<EdgeInterval> right_edge;
  std::optional<EdgeInterval> two_faced;
  std::uint32_t crossed_mask() const;
};

IntervalClassification classify_intervals(const IState& x, const IState& y);

// Masks of generating intervals; no allocation beyond the small vector. x,y must not be far.
int generating_masks(const IState& x, const IState& y, std::array<std::uint32_t, kMaxLines>& out);

struct UMonomial {
  std::array<std::uint16_t, kMaxLines> exps{};
  std::uint16_t operator[](int line) const { return exps[line - 1]; }
  std::uint16_t& operator[](int line) { return exps[line - 1]; }
  int degree() const;
  bool divisible_by_mask(std::uint32_t mask) const;
  auto operator<=>(const UMonomial&) const = default;
};

UMonomial interval_monomial(const LineInterval& g);

// The moves of the canonical path gamma_{x,y}: R-segments (maximal index first), then L-segments.
struct Move {
  bool right;  // R_i if true, else L_i
  int line;
  bool operator==(const Move&) const = default;
};
std::vector<Move> canonical_moves(const IState& x, const IState& y);

}  // namespace ksalg
