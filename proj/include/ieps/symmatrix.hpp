#ifndef IEPS_SYMMATRIX_HPP
#define IEPS_SYMMATRIX_HPP

#include <Eigen/Dense>
#include <istream>
#include <string>
#include <vector>

#include "ieps/types.hpp"

namespace ieps {

// Dense real symmetric matrix. Rows/columns 0-based; graph vertex v maps to
// index v-1. Ingest symmetrizes inputs that are symmetric to 1e-12 (relative)
// and rejects anything worse.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(Eigen::MatrixXd m);

    int n() const { return static_cast<int>(mat_.rows()); }
    double operator()(int i, int j) const { return mat_(i, j); }
    const Eigen::MatrixXd& mat() const { return mat_; }

    // Principal submatrix on 1-based vertex labels (ascending order kept).
    SymMatrix submatrix(const std::vector<int>& vertices) const;
    // Principal submatrix with 1-based vertex v removed.
    SymMatrix without_vertex(int v) const;
    // Conjugate by the permutation sending index i to pi[i+1]-1 (pi 1-based).
    SymMatrix permuted(const std::vector<int>& pi) const;

  private:
    Eigen::MatrixXd mat_;
};

// Multiset of (eigenvalue, multiplicity), values strictly increasing.
struct SpectrumSpec {
    std::vector<std::pair<double, int>> pairs;

    int total() const;
    std::vector<double> expand() const; // sorted values with multiplicity
    void validate() const;
};

using OrderedMultiplicityList = std::vector<int>;

enum class PatternClass { Generalized, Schrodinger, WeightedLaplacian };

std::string pattern_class_name(PatternClass c);
PatternClass parse_pattern_class(const std::string& s);

// "value^mult" tokens, comma separated; bare value means multiplicity 1.
SpectrumSpec parse_spectrum(const std::string& s);
std::string format_spectrum(const SpectrumSpec& s);

std::string format_multlist(const OrderedMultiplicityList& m);
OrderedMultiplicityList parse_multlist(const std::string& s);

// Text format: first line n, then n rows of n numbers.
SymMatrix parse_matrix(std::istream& in);
SymMatrix parse_matrix_file(const std::string& path);
std::string format_matrix(const SymMatrix& a);

} // namespace ieps

#endif
