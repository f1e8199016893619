#pragma once

// Birational invariants of a nondegenerate hypersurface read off its Newton
// polytope: Kodaira dimension, K^{d-1}, Chern numbers of surfaces and the
// data of the Iitaka fibration. analyze() bundles everything into one
// report.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finepoly/canonical_model.hpp"
#include "finepoly/fine_interior.hpp"
#include "finepoly/matrix.hpp"

namespace finepoly {

/// min(dim F(P), d-1), or nullopt for -infinity (empty F(P)).
std::optional<int> kodaira_dimension(const FineInteriorData& data);
std::optional<int> kodaira_dimension(const Polytope& p);

/// K^{d-1} of the canonical model; requires F(P) nonempty.
Rational canonical_degree(const FineInteriorData& data);
Rational canonical_degree(const Polytope& p);

struct SurfaceInvariants {
  Rational c1sq;
  Integer chi;
  Rational c2;
};

/// d = 3 only.
SurfaceInvariants surface_invariants(const FineInteriorData& data);
SurfaceInvariants surface_invariants(const Polytope& p);

struct FibrationData {
  std::vector<LatticeVector> nf_basis;  ///< HNF basis of N^F
  std::vector<LatticeVector> mf_basis;  ///< basis of M_F, the orthogonal of N^F
  IntegerMatrix projection;             ///< pi^F, rows = nf_basis
  Polytope pf;                          ///< P^F = pi^F(P)
  std::optional<Polytope> pf_fine;      ///< F(P^F)
  RationalVector fine_image;            ///< pi^F(F(P)), a single point
  std::vector<LatticeVector> support_in_nf;  ///< N^F ∩ S_F(P) in nf_basis coordinates
  Polytope phif;                        ///< Conv(N^F ∩ S_F(P)) in nf_basis coordinates
  bool check_a = false;  ///< F(P^F) = pi^F(F(P))
  bool check_b = false;  ///< S_F(P^F) = N^F ∩ S_F(P)
  bool check_c = false;  ///< Phi^F full-dimensional, origin its only interior lattice point
};

/// Requires 0 <= dim F(P) < d.
FibrationData fibration_data(const FineInteriorData& data);

struct AnalyzeOptions {
  bool thresholds = true;
  Rational precision = Rational(1, 64);
};

struct AnalysisReport {
  std::string name;
  std::string input_hash;
  std::vector<RationalVector> input_vertices;
  std::size_t dim = 0;
  int fine_dim = -1;
  std::vector<RationalVector> fine_vertices;
  std::vector<LatticeVector> support;
  std::vector<RationalVector> hull_vertices;
  std::vector<RationalVector> hull_extra_vertices;
  ClosednessFlags flags;
  std::optional<int> kodaira;
  std::optional<Rational> canonical_degree;
  std::optional<SurfaceInvariants> surface;
  struct Fibration {
    std::vector<LatticeVector> nf_basis;
    std::vector<RationalVector> pf_vertices;
    std::vector<RationalVector> phif_vertices;
    bool check_a = false, check_b = false, check_c = false;
    bool operator==(const Fibration&) const = default;
  };
  std::optional<Fibration> fibration;
  std::optional<bool> codim2_ok;
  Rational lambda0;
  std::optional<std::pair<Rational, Rational>> lambda_closed_interval;

  bool operator==(const AnalysisReport& o) const;
};

/// FNV-1a over the sorted vertex list, as 16 hex digits.
std::string polytope_hash(const Polytope& p);

AnalysisReport analyze(const Polytope& p, const std::string& name = "", const AnalyzeOptions& options = {});

}  // namespace finepoly
