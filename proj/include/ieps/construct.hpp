#ifndef IEPS_CONSTRUCT_HPP
#define IEPS_CONSTRUCT_HPP

#include <cstdint>
#include <map>

#include "ieps/ssp.hpp"

namespace ieps {

struct ConstructionResult {
    SymMatrix matrix;
    Graph graph;
    PatternClass pattern_class = PatternClass::Schrodinger;
    double spectral_residual = 0; // max |achieved - target| over sorted eigenvalues
    bool ssp = false;
    std::vector<std::string> provenance;
};

struct RotationStep {
    int i = 0, j = 0;   // 1-based, distinct
    double theta = 0;   // in (0, pi/4)
};

// Tridiagonal realization of a distinct spectrum with negative off-diagonals
// (three-term recurrence from the uniform start vector, then a signature flip).
ConstructionResult jacobi_from_spectrum(const std::vector<double>& lambda,
                                        const Tolerances& tol = {});

// Similarity by the Givens rotation on the (i,j) plane. The pattern of `a` is
// inferred from its entries; hypotheses: N(i)\{j} contains N(j)\{i}, and
// either i ~ j or a_ii < a_jj. Throws when theta exceeds the admissible bound
// (the message carries the bound).
SymMatrix givens_rotate(const SymMatrix& a, const RotationStep& step,
                        const Tolerances& tol = {});

// Largest theta in (0, pi/4) preserving all strict sign conditions, by bisection.
double givens_theta_bound(const SymMatrix& a, int i, int j, const Tolerances& tol = {});

// Realization on the complete graph; requires a simple smallest eigenvalue.
ConstructionResult complete_from_spectrum(const SpectrumSpec& lambda,
                                          const Tolerances& tol = {});

// Star K_{1,l}: closed-form realization of {lo, mid^(l-1), hi}.
ConstructionResult star_realize(int num_leaves, double lo, double mid, double hi,
                                const Tolerances& tol = {});

// Signature similarity making every spanning-tree entry negative. Returns the
// +-1 diagonal and the conjugated matrix.
std::pair<Eigen::VectorXd, SymMatrix> signature_normalize(const SymMatrix& a, const Graph& g,
                                                          const Graph& spanning_tree,
                                                          const Tolerances& tol = {});

// Tree realization for the trees on at most 5 vertices (paths, stars, the
// spider S(2,1,1)), gated by the committed realizability tables.
ConstructionResult tree_realize(const SpectrumSpec& lambda, const Graph& tree,
                                const Tolerances& tol = {});

// For an odd unicyclic graph: signature-normalize a in S(G) into the
// negative-entry class. Requires the cycle entry product negative or the
// largest eigenvalue multiple.
ConstructionResult unicyclic_normalize(const SymMatrix& a, const Graph& g,
                                       const Tolerances& tol = {});

// Isospectral perturbation onto a spanning supergraph with prescribed signs
// (+1/-1) on the new edges; requires the SSP. ||A' - a|| <= delta.
ConstructionResult supergraph_extend(const SymMatrix& a, const Graph& g, const Graph& h,
                                     const std::map<Edge, int>& signs, double delta = 1e-2,
                                     const Tolerances& tol = {});

// Isospectral perturbation adding the liberation edges beta along direction x
// (from liberation_direction); the result has the SSP.
ConstructionResult liberate(const SymMatrix& a, const Graph& g, const std::vector<Edge>& beta,
                            const Eigen::VectorXd& x, double delta = 1e-2,
                            const Tolerances& tol = {});

// Same pattern and signs, nearby prescribed spectrum; requires the SSP.
ConstructionResult bifurcate(const SymMatrix& a, const Graph& g, const SpectrumSpec& target,
                             const Tolerances& tol = {});

// Repeated bifurcation along a straight path of spectra.
ConstructionResult continue_spectrum(const SymMatrix& a, const Graph& g,
                                     const SpectrumSpec& target, int max_legs = 64,
                                     const Tolerances& tol = {});

// Join one endpoint of a path P_p to every vertex of b.graph; raises every
// non-minimal multiplicity by one and appends p-q+1 fresh simple values.
ConstructionResult firework(const ConstructionResult& b, int p, const std::vector<double>& extra,
                            const Tolerances& tol = {});

// Rank-2 factor family on the bowtie; spectrum {-2x^2 - 1, -1, 0^3}.
SymMatrix family_bfly(double x);
// Parametric family on K_{2,3} with multiplicity list 131 and the SSP.
SymMatrix family_k23(double a, double b, double c);

// p*a + q*I with p > 0.
SymMatrix affine_shift_scale(const SymMatrix& a, double p, double q);

// Closed-form reflection-symmetric realizers of {l1, l2^2, l3^2}.
ConstructionResult cycle5_realize_122(double l1, double l2, double l3,
                                      const Tolerances& tol = {});
ConstructionResult camp_realize_122(double l1, double l2, double l3,
                                    const Tolerances& tol = {});

// Closed-form realizers built from the parametric families.
ConstructionResult bfly_realize_113(double lo, double mid, double hi, const Tolerances& tol = {});
ConstructionResult k23_realize_131(double lo, double mid, double hi, const Tolerances& tol = {});

// Direct-sum helper: block-diagonal placement of parts on disjoint vertex sets.
SymMatrix block_embed(int n, const std::vector<std::pair<std::vector<int>, SymMatrix>>& parts);

// Seeded search for a matrix in the negative class with the prescribed
// spectrum: alternating projections from random isospectral starts.
std::optional<ConstructionResult> random_realize(const Graph& g, const SpectrumSpec& target,
                                                 uint64_t seed, int attempts,
                                                 const Tolerances& tol = {});

// Validates membership, spectrum deviation and the SSP flag, assembling a result.
ConstructionResult validate_result(const SymMatrix& m, const Graph& g, PatternClass cls,
                                   const std::vector<double>& target_sorted,
                                   std::vector<std::string> provenance,
                                   const Tolerances& tol = {});

} // namespace ieps

#endif
