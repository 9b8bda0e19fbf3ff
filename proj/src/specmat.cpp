#include "ieps/specmat.hpp"

#include <algorithm>
#include <cmath>

namespace ieps {

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigensolve(const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.mat());
    if (es.info() != Eigen::Success) throw numeric_error("symmetric eigensolver failed");
    return es;
}

std::vector<std::pair<double, int>> cluster(const Eigen::VectorXd& w, double gap) {
    std::vector<std::pair<double, int>> groups;
    double sum = 0;
    int count = 0;
    double last = 0;
    for (int i = 0; i < w.size(); ++i) {
        double x = w(i);
        if (count > 0 && std::abs(x - last) <= gap * std::max(1.0, std::abs(x))) {
            sum += x;
            ++count;
        } else {
            if (count > 0) groups.push_back({sum / count, count});
            sum = x;
            count = 1;
        }
        last = x;
    }
    if (count > 0) groups.push_back({sum / count, count});
    return groups;
}

} // namespace

bool membership(const SymMatrix& a, const Graph& g, PatternClass cls, const Tolerances& tol) {
    tol.validate();
    if (a.n() != g.n()) throw input_error("matrix order does not match graph");
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j) {
            double v = a(i - 1, j - 1);
            if (g.has_edge(i, j)) {
                if (std::abs(v) < tol.sign_floor) return false;
                if (cls != PatternClass::Generalized && v > -tol.sign_floor) return false;
            } else {
                if (std::abs(v) >= tol.sign_floor) return false;
            }
        }
    if (cls == PatternClass::WeightedLaplacian) {
        Eigen::VectorXd rowsum = a.mat() * Eigen::VectorXd::Ones(a.n());
        if (rowsum.cwiseAbs().maxCoeff() > tol.residual) return false;
    }
    return true;
}

SpectrumSpec spectrum(const SymMatrix& a, const Tolerances& tol) {
    tol.validate();
    SpectrumSpec s;
    if (a.n() == 0) return s;
    auto es = eigensolve(a);
    s.pairs = cluster(es.eigenvalues(), tol.eig_gap);
    return s;
}

OrderedMultiplicityList multiplicity_list(const SpectrumSpec& s) {
    OrderedMultiplicityList m;
    for (auto& [v, k] : s.pairs) m.push_back(k);
    return m;
}

int multiplicity_at(const SymMatrix& a, double lambda, const Tolerances& tol) {
    for (auto& [v, m] : spectrum(a, tol).pairs)
        if (std::abs(v - lambda) <= tol.eig_gap * std::max(1.0, std::abs(lambda))) return m;
    return 0;
}

PfResult pf_check(const SymMatrix& a, const Graph& g, const Tolerances& tol) {
    tol.validate();
    if (!membership(a, g, PatternClass::Schrodinger, tol))
        throw input_error("pf_check requires a Schrodinger operator of g");
    if (!is_connected(g)) throw input_error("pf_check requires a connected graph");
    auto es = eigensolve(a);
    auto groups = cluster(es.eigenvalues(), tol.eig_gap);
    PfResult r;
    r.smallest_simple = groups.front().second == 1;
    Eigen::VectorXd v = es.eigenvectors().col(0);
    int imax;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0) v = -v;
    r.positive_vector = (v.minCoeff() > 0);
    return r;
}

int q_count(const SymMatrix& a, const Tolerances& tol) {
    return static_cast<int>(spectrum(a, tol).pairs.size());
}

bool diam_bound_holds(const SymMatrix& a, const Graph& g, const Tolerances& tol) {
    if (!membership(a, g, PatternClass::Schrodinger, tol))
        throw input_error("diam_bound_holds requires a Schrodinger operator of g");
    if (!is_connected(g)) throw input_error("diam_bound_holds requires a connected graph");
    return q_count(a, tol) >= diameter(g) + 1;
}

LaplacianDecomposition laplacian_decompose(const SymMatrix& a, const Graph& g,
                                           const Tolerances& tol) {
    tol.validate();
    if (!is_connected(g)) throw input_error("laplacian_decompose requires a connected graph");
    if (!membership(a, g, PatternClass::Schrodinger, tol))
        throw input_error("laplacian_decompose requires a Schrodinger operator of g");
    auto es = eigensolve(a);
    double lmin = es.eigenvalues()(0);
    if (std::abs(lmin) > tol.residual)
        throw input_error("matrix is not singular positive semidefinite");
    Eigen::VectorXd v = es.eigenvectors().col(0);
    int imax;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0) v = -v;
    if (v.minCoeff() <= 0)
        throw numeric_error("null vector is not sign-definite; precondition failed");
    v.normalize();
    LaplacianDecomposition out;
    out.m_diag = v.array().square();
    Eigen::MatrixXd l = v.asDiagonal() * a.mat() * v.asDiagonal();
    out.laplacian = SymMatrix(l);
    Eigen::VectorXd rowsum = l * Eigen::VectorXd::Ones(a.n());
    if (rowsum.cwiseAbs().maxCoeff() > tol.residual)
        throw numeric_error("decomposition residual exceeded tolerance");
    return out;
}

std::string vertex_role_name(VertexRole r) {
    switch (r) {
    case VertexRole::Upper: return "Upper";
    case VertexRole::Neutral: return "Neutral";
    case VertexRole::Downer: return "Downer";
    }
    return "?";
}

VertexRole vertex_role(const SymMatrix& a, int v, double lambda, const Tolerances& tol) {
    if (v < 1 || v > a.n()) throw input_error("vertex out of range");
    int ma = multiplicity_at(a, lambda, tol);
    int mv = a.n() == 1 ? 0 : multiplicity_at(a.without_vertex(v), lambda, tol);
    int d = mv - ma;
    if (d > 1 || d < -1)
        throw numeric_error("multiplicity changed by more than one: tolerance artifact");
    if (d == 1) return VertexRole::Upper;
    if (d == 0) return VertexRole::Neutral;
    return VertexRole::Downer;
}

bool minup_holds(const SymMatrix& a, const Graph& g, int v, const Tolerances& tol) {
    if (!membership(a, g, PatternClass::Schrodinger, tol))
        throw input_error("minup_holds requires a Schrodinger operator of g");
    if (!is_connected(g)) throw input_error("minup_holds requires a connected graph");
    auto comps = components_after(g, v);
    if (comps.size() < 2) throw input_error("vertex is not a cut vertex");
    for (auto& comp : comps) {
        auto sub = a.submatrix(comp.vertices);
        double lmin = spectrum(sub, tol).pairs.front().first;
        if (vertex_role(a, v, lmin, tol) != VertexRole::Upper) return false;
    }
    return true;
}

bool fulljoin_witness(const SymMatrix& a, const Graph& g, int v, const InducedComponent& comp,
                      const Tolerances& tol) {
    if (!membership(a, g, PatternClass::Schrodinger, tol))
        throw input_error("fulljoin_witness requires a Schrodinger operator of g");
    auto sub = a.submatrix(comp.vertices);
    auto spec = spectrum(sub, tol);
    bool any_upper = false;
    for (size_t i = 1; i < spec.pairs.size(); ++i)
        if (vertex_role(a, v, spec.pairs[i].first, tol) == VertexRole::Upper) {
            any_upper = true;
            break;
        }
    if (any_upper) return true; // hypothesis void, implication holds
    for (int u : comp.vertices)
        if (!g.has_edge(u, v)) return false;
    return true;
}

} // namespace ieps
