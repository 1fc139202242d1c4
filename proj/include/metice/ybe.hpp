// Yang-Baxter checker, the n = 1 R-matrix, and the row-swap identities it implies.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "metice/partition.hpp"

namespace metice {

/// R-vertex spins keyed (left-top, left-bottom, right-top, right-bottom).
using RKey = std::array<Spin, 4>;
using RVertexTable = std::map<RKey, LaurentPoly>;
using VertexTable = std::map<VertexConfig, LaurentPoly>;

/// The n = 1 R-matrix in z_i = z_{xi+1}, z_{i+1} = z_{yi+1} of a `vars`-variable ring.
RVertexTable rmatrix_n1(int vars, int xi, int yi);

/// Γ weights at n = 1 with spectral parameter z_{var+1}, as polynomials in u.
VertexTable gamma_vertex_table_n1(int vars, int var);

enum class EdgeName { sigma, tau, alpha, beta, rho, theta, nu, mu, gamma, delta, psi, phi };
std::string to_string(EdgeName e);

struct WiredVertex {
  enum class Kind { R, S, T } kind;
  std::array<EdgeName, 4> edges;  // (N,S,W,E) for S/T; (lt,lb,rt,rb) for R
};

struct WiringSide {
  std::array<WiredVertex, 3> vertices;
  std::array<EdgeName, 3> internal;
};

struct WiringDiagram {
  WiringSide left;
  WiringSide right;

  /// Each internal edge meets two vertices, each boundary edge one, on both sides.
  bool validate() const;
};

/// LHS = Σ_{ν,μ,γ} R(σ,τ;ν,μ) S(α,γ,ν,ρ) T(γ,β,μ,θ);
/// RHS = Σ_{δ,ψ,φ} T(α,δ,σ,ψ) S(δ,β,τ,φ) R(ψ,φ;ρ,θ).
WiringDiagram standard_wiring();

struct YbeBoundaryResult {
  std::array<Spin, 6> boundary;  // σ, τ, α, β, ρ, θ
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool pass = false;
};

struct YbeReport {
  std::vector<YbeBoundaryResult> boundaries;  // all 64
  int failures = 0;
  bool pass() const { return failures == 0; }
};

YbeReport ybe_check(const RVertexTable& R, const VertexTable& S, const VertexTable& T,
                    const WiringDiagram& wiring = standard_wiring());

struct RowSwapReport {
  LaurentPoly lhs;  // B_R(all +) · Z(𝔖)
  LaurentPoly rhs;  // B_R(all −) · Z(𝔖′)
  bool pass = false;
};

/// n = 1 only.  𝔖′ exchanges the spectral parameters of the rows carrying z_i and z_{i+1}.
RowSwapReport train_argument_row_swap(const SystemSpec& spec, int i);
/// (z_i − u z_{i+1}) Z(z) = (z_{i+1} − u z_i) Z(σ_i z), with Z from the spec.
RowSwapReport commutation_check(const SystemSpec& spec, int i);

}  // namespace metice
