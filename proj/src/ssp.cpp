#include "ieps/ssp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ieps {

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

int rank_by_svd(const Eigen::MatrixXd& m, double rel, double* smallest_kept = nullptr) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0) return 0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) >= rel * s(0)) r = i + 1;
    if (smallest_kept) *smallest_kept = s(std::min<int>(m.rows(), m.cols()) - 1);
    return r;
}

} // namespace

VerificationMatrix verification_matrix(const SymMatrix& a, const Graph& g) {
    if (!membership(a, g, PatternClass::Generalized))
        throw input_error("verification_matrix requires a in S(g)");
    VerificationMatrix vm;
    vm.row_index = g.nonedges();
    vm.col_index = all_pairs(g.n());
    vm.psi.resize(vm.row_index.size(), vm.col_index.size());
    const auto& A = a.mat();
    for (size_t r = 0; r < vm.row_index.size(); ++r) {
        auto [i, j] = vm.row_index[r];
        // K = A X_ij - X_ij A : column j-1 gets A e_{i-1}, column i-1 gets
        // A e_{j-1}, row i-1 subtracts A_{j-1,:}, row j-1 subtracts A_{i-1,:}.
        Eigen::MatrixXd k = Eigen::MatrixXd::Zero(g.n(), g.n());
        k.col(j - 1) += A.col(i - 1);
        k.col(i - 1) += A.col(j - 1);
        k.row(i - 1) -= A.row(j - 1);
        k.row(j - 1) -= A.row(i - 1);
        for (size_t c = 0; c < vm.col_index.size(); ++c) {
            auto [p, q] = vm.col_index[c];
            vm.psi(r, c) = k(p - 1, q - 1);
        }
    }
    return vm;
}

SspReport ssp_report(const SymMatrix& a, const Graph& g, const Tolerances& tol) {
    tol.validate();
    auto vm = verification_matrix(a, g);
    SspReport rep;
    rep.nonedge_count = static_cast<int>(vm.row_index.size());
    if (rep.nonedge_count == 0) {
        rep.ssp = true;
        return rep;
    }
    double smallest = 0;
    rep.rank = rank_by_svd(vm.psi, tol.rank_rel, &smallest);
    rep.smallest_sv = smallest;
    rep.ssp = (rep.rank == rep.nonedge_count);
    return rep;
}

bool has_ssp(const SymMatrix& a, const Graph& g, const Tolerances& tol) {
    return ssp_report(a, g, tol).ssp;
}

AnnihilatorBasis annihilator_basis(const SymMatrix& a, const Graph& g, const Tolerances& tol) {
    tol.validate();
    auto vm = verification_matrix(a, g);
    AnnihilatorBasis basis;
    basis.nonedge_index = vm.row_index;
    int ne = static_cast<int>(vm.row_index.size());
    if (ne == 0) {
        basis.coords.resize(0, 0);
        return basis;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(vm.psi, Eigen::ComputeFullU);
    const auto& s = svd.singularValues();
    int r = 0;
    if (s.size() > 0 && s(0) > 0)
        for (int i = 0; i < s.size(); ++i)
            if (s(i) >= tol.rank_rel * s(0)) r = i + 1;
    int dim = ne - r;
    basis.coords.resize(dim, ne);
    for (int k = 0; k < dim; ++k) basis.coords.row(k) = svd.matrixU().col(r + k).transpose();
    for (int k = 0; k < dim; ++k) {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(g.n(), g.n());
        for (int e = 0; e < ne; ++e) {
            auto [i, j] = vm.row_index[e];
            // 1/sqrt(2) makes the reshaped elements Frobenius-orthonormal
            x(i - 1, j - 1) = x(j - 1, i - 1) = basis.coords(k, e) / std::sqrt(2.0);
        }
        basis.elements.push_back(SymMatrix(x));
    }
    return basis;
}

namespace {

std::vector<int> new_edge_columns(const Graph& g, const Graph& h,
                                  const std::vector<Edge>& nonedges_g) {
    if (h.n() != g.n()) throw input_error("supergraph must have the same vertex set");
    for (auto e : g.edges())
        if (!h.has_edge(e.first, e.second))
            throw input_error("h is not a spanning supergraph of g");
    std::vector<int> cols;
    for (size_t k = 0; k < nonedges_g.size(); ++k)
        if (h.has_edge(nonedges_g[k].first, nonedges_g[k].second))
            cols.push_back(static_cast<int>(k));
    return cols;
}

} // namespace

bool has_ssp_wrt(const SymMatrix& a, const Graph& g, const Graph& h, const Tolerances& tol) {
    auto basis = annihilator_basis(a, g, tol);
    auto cols = new_edge_columns(g, h, basis.nonedge_index);
    int dim = static_cast<int>(basis.coords.rows());
    if (dim == 0) return true;
    // trivial intersection iff the annihilator space restricted to the new
    // edge coordinates is injective
    Eigen::MatrixXd restricted(dim, cols.size());
    for (size_t c = 0; c < cols.size(); ++c) restricted.col(c) = basis.coords.col(cols[c]);
    return rank_by_svd(restricted, tol.rank_rel) == dim;
}

bool is_liberation_set(const SymMatrix& a, const Graph& g, const std::vector<Edge>& beta,
                       const Tolerances& tol) {
    if (beta.empty()) throw input_error("liberation set must be nonempty");
    std::set<Edge> seen;
    for (auto [u, v] : beta) {
        Edge e{std::min(u, v), std::max(u, v)};
        if (g.has_edge(e.first, e.second))
            throw input_error("liberation set must avoid edges of g");
        if (!seen.insert(e).second) throw input_error("duplicate edge in liberation set");
    }
    for (size_t drop = 0; drop < beta.size(); ++drop) {
        std::vector<Edge> es(g.edges());
        for (size_t k = 0; k < beta.size(); ++k)
            if (k != drop) es.push_back(beta[k]);
        Graph h(g.n(), es);
        if (!has_ssp_wrt(a, g, h, tol)) return false;
    }
    return true;
}

std::optional<Eigen::VectorXd> liberation_direction(const SymMatrix& a, const Graph& g,
                                                    const std::vector<Edge>& beta,
                                                    const std::vector<int>& signs,
                                                    const Tolerances& tol) {
    if (signs.size() != beta.size()) throw input_error("one sign per beta edge required");
    for (int s : signs)
        if (s != 1 && s != -1) throw input_error("signs must be +1 or -1");
    auto basis = annihilator_basis(a, g, tol);
    int nb = static_cast<int>(beta.size());
    Eigen::VectorXd s(nb);
    for (int k = 0; k < nb; ++k) s(k) = signs[k];
    int dim = static_cast<int>(basis.coords.rows());
    if (dim == 0) return s; // no constraints
    std::vector<int> cols;
    for (auto [u, v] : beta) {
        Edge e{std::min(u, v), std::max(u, v)};
        auto it = std::find(basis.nonedge_index.begin(), basis.nonedge_index.end(), e);
        if (it == basis.nonedge_index.end())
            throw input_error("beta edge is not a non-edge of g");
        cols.push_back(static_cast<int>(it - basis.nonedge_index.begin()));
    }
    Eigen::MatrixXd z(dim, nb);
    for (int c = 0; c < nb; ++c) z.col(c) = basis.coords.col(cols[c]);
    // alternate projections: kernel of z <-> prescribed-sign slab
    Eigen::JacobiSVD<Eigen::MatrixXd> zsvd(z, Eigen::ComputeThinU | Eigen::ComputeThinV);
    auto project_kernel = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return x - zsvd.solve(z * x);
    };
    Eigen::VectorXd x = s;
    const double slab = 1e-6;
    for (int it = 0; it < 500; ++it) {
        x = project_kernel(x);
        for (int k = 0; k < nb; ++k)
            if (s(k) * x(k) < slab) x(k) = s(k) * slab;
    }
    x = project_kernel(x);
    double scale = x.cwiseAbs().maxCoeff();
    if (scale < tol.sign_floor) return std::nullopt;
    x /= scale;
    for (int k = 0; k < nb; ++k)
        if (s(k) * x(k) < 1e-6) return std::nullopt;
    return x;
}

} // namespace ieps
