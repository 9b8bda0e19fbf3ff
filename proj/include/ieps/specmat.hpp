#ifndef IEPS_SPECMAT_HPP
#define IEPS_SPECMAT_HPP

#include "ieps/graph.hpp"
#include "ieps/symmatrix.hpp"

namespace ieps {

// Pattern membership. Generalized: off-diagonal nonzero exactly on edges.
// Schrodinger: additionally negative on edges. WeightedLaplacian: additionally
// annihilates the all-ones vector (to tol.residual).
bool membership(const SymMatrix& a, const Graph& g, PatternClass cls, const Tolerances& tol = {});

// Eigenvalues clustered with the relative gap tol.eig_gap; group value is the
// group mean.
SpectrumSpec spectrum(const SymMatrix& a, const Tolerances& tol = {});

OrderedMultiplicityList multiplicity_list(const SpectrumSpec& s);

// Multiplicity of lambda in the clustered spectrum (0 when absent).
int multiplicity_at(const SymMatrix& a, double lambda, const Tolerances& tol = {});

struct PfResult {
    bool smallest_simple = false;
    bool positive_vector = false;
};
// Perron-Frobenius facts for a connected Schrodinger operator: smallest
// eigenvalue simple, eigenvector entrywise positive once the largest-magnitude
// entry is flipped positive.
PfResult pf_check(const SymMatrix& a, const Graph& g, const Tolerances& tol = {});

// Number of distinct (clustered) eigenvalues.
int q_count(const SymMatrix& a, const Tolerances& tol = {});
bool diam_bound_holds(const SymMatrix& a, const Graph& g, const Tolerances& tol = {});

struct LaplacianDecomposition {
    Eigen::VectorXd m_diag; // positive diagonal of M
    SymMatrix laplacian;    // L with L*1 = 0, A = M^{-1/2} L M^{-1/2}
};
LaplacianDecomposition laplacian_decompose(const SymMatrix& a, const Graph& g,
                                           const Tolerances& tol = {});

enum class VertexRole { Upper, Neutral, Downer };
std::string vertex_role_name(VertexRole r);

// Compares mult_{A(v)}(lambda) against mult_A(lambda); v is 1-based.
VertexRole vertex_role(const SymMatrix& a, int v, double lambda, const Tolerances& tol = {});

// For every component H of G - v, v is Upper for the smallest eigenvalue of A[H].
bool minup_holds(const SymMatrix& a, const Graph& g, int v, const Tolerances& tol = {});

// Implication check: if v is Upper for no non-smallest eigenvalue of A[H],
// then v is adjacent to every vertex of H.
bool fulljoin_witness(const SymMatrix& a, const Graph& g, int v, const InducedComponent& comp,
                      const Tolerances& tol = {});

} // namespace ieps

#endif
