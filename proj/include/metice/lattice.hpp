// Boundary data, ice states and charges.
//
// Columns are labelled 0..C−1 increasing from right to left.  Row k of a
// state (0 = top) sits between vertical layers k and k+1.  Its horizontal
// edges are e_0..e_C with e_0 the right boundary and e_C the left boundary;
// the vertex in column c has east edge e_c and west edge e_{c+1}.
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace metice {

enum class Spin : std::uint8_t { plus, minus };

inline char spin_char(Spin s) { return s == Spin::plus ? '+' : '-'; }

struct VertexConfig {
  Spin N, S, W, E;
  bool operator==(const VertexConfig&) const = default;
  auto operator<=>(const VertexConfig&) const = default;
};

/// Even number of + spins, and not one of the two crossing patterns.
bool is_admissible(const VertexConfig& v);
std::string to_string(const VertexConfig& v);

/// Set of column labels, stored as a bitmask (C ≤ 64).
class ColumnSet {
 public:
  constexpr ColumnSet() = default;
  constexpr explicit ColumnSet(std::uint64_t bits) : bits_(bits) {}
  static ColumnSet from_columns(const std::vector<int>& cols);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int c) const { return (bits_ >> c) & 1U; }
  int size() const { return std::popcount(bits_); }
  void insert(int c) { bits_ |= std::uint64_t{1} << c; }
  /// Members in decreasing order (the order of a pattern row).
  std::vector<int> columns() const;
  constexpr bool operator==(const ColumnSet&) const = default;
  constexpr auto operator<=>(const ColumnSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

enum class Family { gamma, delta };
std::string to_string(Family f);

struct Boundary {
  int r = 0;
  std::vector<int> lambda;   // (λ_r, …, λ_1, λ_0) with λ_0 = 0
  int C = 1;                 // column count λ_r + r + 1
  std::vector<int> top_row;  // λ + ρ, decreasing
  ColumnSet top;
};

/// Throws std::invalid_argument for a non-dominant λ, λ_0 ≠ 0, or a wrong length.
Boundary boundary_from_lambda(int r, const std::vector<int>& lambda);

using RowEdges = std::vector<Spin>;  // e_0..e_C

/// Parity closure from the + left boundary.  Returns the edges when every
/// vertex is admissible and the right boundary comes out −.
std::optional<RowEdges> fill_row(ColumnSet top, ColumnSet bottom, int C);

class IceState {
 public:
  IceState(int C, std::vector<ColumnSet> layers, std::vector<RowEdges> rows)
      : C_(C), layers_(std::move(layers)), rows_(std::move(rows)) {}

  int columns() const { return C_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<ColumnSet>& layers() const { return layers_; }
  const RowEdges& row_edges(int row) const { return rows_.at(row); }
  VertexConfig vertex(int row, int col) const;

 private:
  int C_;
  std::vector<ColumnSet> layers_;
  std::vector<RowEdges> rows_;
};

/// Builds the state from its vertical layers, or nothing if some row cannot be
/// completed admissibly.
std::optional<IceState> horizontal_fill(const Boundary& b, const std::vector<ColumnSet>& layers);

/// Visits every admissible state once, in lexicographic order of the pattern rows.
void for_each_state(const Boundary& b, const std::function<void(const IceState&)>& visit);
std::vector<IceState> enumerate_states(const Boundary& b);
std::size_t count_states(const Boundary& b);

/// Strictly decreasing rows interleaving `above` (one entry shorter).
std::vector<std::vector<int>> strict_branches(const std::vector<int>& above);

/// Number of + among e_0..e_col (edges right of the vertex, east edge included), mod n.
int charge_gamma(const IceState& s, int row, int col, int n);
/// Number of − among e_{col+1}..e_C (edges left of the vertex, west edge included), mod n.
int charge_delta(const IceState& s, int row, int col, int n);

struct EdgeLabel {
  Spin spin;
  int count;   // unreduced charge
  int charge;  // count mod n
};

struct ChargeLabeling {
  Family family;
  int n;
  std::vector<std::vector<EdgeLabel>> rows;  // rows[k][e], e = 0..C
};

/// Γ labels count + from the right boundary (label(e_0) = 0 as e_0 is −);
/// Δ labels count − from the left boundary.
ChargeLabeling charge_labels(const IceState& s, Family family, int n);

}  // namespace metice
