#ifndef IEPS_SSP_HPP
#define IEPS_SSP_HPP

#include <optional>

#include "ieps/specmat.hpp"

namespace ieps {

// SSP verification matrix. Rows indexed by non-edges of G (lexicographic),
// columns by all index pairs i < j (lexicographic); row (i,j) holds
// vec(A X_ij - X_ij A) over the strictly upper triangle.
struct VerificationMatrix {
    std::vector<Edge> row_index; // non-edges, 1-based
    std::vector<Edge> col_index; // all pairs, 1-based
    Eigen::MatrixXd psi;
};

VerificationMatrix verification_matrix(const SymMatrix& a, const Graph& g);

struct SspReport {
    bool ssp = false;
    int rank = 0;
    int nonedge_count = 0;
    double smallest_sv = 0; // margin visibility for borderline rank decisions
};
SspReport ssp_report(const SymMatrix& a, const Graph& g, const Tolerances& tol = {});
bool has_ssp(const SymMatrix& a, const Graph& g, const Tolerances& tol = {});

// Orthonormal basis of the annihilator space R(A): symmetric X with
// A o X = I o X = O and AX = XA, supported on the non-edges of G.
struct AnnihilatorBasis {
    std::vector<Edge> nonedge_index;
    Eigen::MatrixXd coords; // one row per basis element, coords over nonedge_index
    std::vector<SymMatrix> elements; // Frobenius-orthonormal
};
AnnihilatorBasis annihilator_basis(const SymMatrix& a, const Graph& g,
                                   const Tolerances& tol = {});

// SSP with respect to a spanning supergraph h: no nonzero annihilator is
// supported inside the non-edges of h.
bool has_ssp_wrt(const SymMatrix& a, const Graph& g, const Graph& h,
                 const Tolerances& tol = {});

// beta is a liberation set iff A has the SSP w.r.t. G + beta' for every
// beta' obtained by dropping one edge of beta.
bool is_liberation_set(const SymMatrix& a, const Graph& g, const std::vector<Edge>& beta,
                       const Tolerances& tol = {});

// Direction supported exactly on beta with the prescribed signs (+1/-1 per
// edge), orthogonal to every annihilator; nullopt when the sign-constrained
// feasibility problem has no solution. Normalized to unit max-norm.
std::optional<Eigen::VectorXd> liberation_direction(const SymMatrix& a, const Graph& g,
                                                    const std::vector<Edge>& beta,
                                                    const std::vector<int>& signs,
                                                    const Tolerances& tol = {});

} // namespace ieps

#endif
