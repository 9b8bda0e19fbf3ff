#include "ieps/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ieps/catalog.hpp"
#include "ieps/golden.hpp"

namespace ieps {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::vector<double> sorted_eigenvalues(const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.mat(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw numeric_error("eigensolver failed");
    std::vector<double> w(es.eigenvalues().data(), es.eigenvalues().data() + a.n());
    return w;
}

double spectral_deviation(const Eigen::MatrixXd& m, const std::vector<double>& target) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    double dev = 0;
    for (int i = 0; i < m.rows(); ++i)
        dev = std::max(dev, std::abs(es.eigenvalues()(i) - target[i]));
    return dev;
}

// Pattern of a matrix: edges where the entry magnitude clears the floor.
Graph pattern_of(const SymMatrix& a, const Tolerances& tol) {
    std::vector<Edge> es;
    for (int i = 1; i <= a.n(); ++i)
        for (int j = i + 1; j <= a.n(); ++j)
            if (std::abs(a(i - 1, j - 1)) >= tol.sign_floor) es.push_back({i, j});
    return Graph(a.n(), es);
}

// Three-term recurrence on diag(lams) from a custom start vector, with full
// reorthogonalization. Returns the tridiagonal with positive off-diagonals.
Eigen::MatrixXd lanczos_tridiag(const std::vector<double>& lams, Eigen::VectorXd start) {
    int n = static_cast<int>(lams.size());
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(lams.data(), n);
    start.normalize();
    Eigen::MatrixXd v(n, n);
    v.col(0) = start;
    Eigen::VectorXd alpha(n), beta(n - 1 > 0 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXd w = d.asDiagonal() * v.col(k);
        alpha(k) = v.col(k).dot(w);
        w -= alpha(k) * v.col(k);
        if (k > 0) w -= beta(k - 1) * v.col(k - 1);
        for (int pass = 0; pass < 2; ++pass)
            for (int c = 0; c <= k; ++c) w -= v.col(c).dot(w) * v.col(c);
        if (k < n - 1) {
            double b = w.norm();
            if (b < 1e-13) throw numeric_error("recurrence breakdown: repeated spectrum values");
            beta(k) = b;
            v.col(k + 1) = w / b;
        }
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    t.diagonal() = alpha;
    for (int k = 0; k + 1 < n; ++k) t(k, k + 1) = t(k + 1, k) = beta(k);
    return t;
}

Eigen::MatrixXd flip_offdiagonals_negative(Eigen::MatrixXd t) {
    int n = static_cast<int>(t.rows());
    Eigen::VectorXd d(n);
    d(0) = 1;
    // choose d so that d_i d_{i-1} t_{i-1,i} < 0
    for (int i = 1; i < n; ++i) d(i) = t(i - 1, i) > 0 ? -d(i - 1) : d(i - 1);
    return d.asDiagonal() * t * d.asDiagonal();
}

} // namespace

ConstructionResult validate_result(const SymMatrix& m, const Graph& g, PatternClass cls,
                                   const std::vector<double>& target_sorted,
                                   std::vector<std::string> provenance, const Tolerances& tol) {
    ConstructionResult res;
    res.matrix = m;
    res.graph = g;
    res.pattern_class = cls;
    if (!membership(m, g, cls, tol))
        throw numeric_error("constructed matrix violates pattern membership");
    std::vector<double> tgt(target_sorted);
    std::sort(tgt.begin(), tgt.end());
    res.spectral_residual = spectral_deviation(m.mat(), tgt);
    if (res.spectral_residual > tol.residual)
        throw numeric_error("constructed matrix misses the target spectrum (residual " +
                            fmt(res.spectral_residual) + ")");
    res.ssp = has_ssp(m, g, tol);
    res.provenance = std::move(provenance);
    return res;
}

ConstructionResult jacobi_from_spectrum(const std::vector<double>& lambda,
                                        const Tolerances& tol) {
    tol.validate();
    if (lambda.empty()) throw input_error("empty spectrum");
    std::vector<double> lams(lambda);
    std::sort(lams.begin(), lams.end());
    int n = static_cast<int>(lams.size());
    for (int i = 0; i + 1 < n; ++i)
        if (lams[i + 1] - lams[i] <= tol.eig_gap * std::max(1.0, std::abs(lams[i])))
            throw realizability_error("path spectra require pairwise distinct values");
    Eigen::MatrixXd t;
    if (n == 1) {
        t = Eigen::MatrixXd::Constant(1, 1, lams[0]);
    } else {
        t = lanczos_tridiag(lams, Eigen::VectorXd::Ones(n));
        t = flip_offdiagonals_negative(t);
    }
    Graph path = Graph(n, [&] {
        std::vector<Edge> es;
        for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
        return es;
    }());
    return validate_result(SymMatrix(t), path, PatternClass::Schrodinger, lams, {"jacobi"}, tol);
}

double givens_theta_bound(const SymMatrix& a, int i, int j, const Tolerances& tol) {
    tol.validate();
    Graph g = pattern_of(a, tol);
    int n = a.n();
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw input_error("bad rotation indices");
    // H adds edges from j to N(i) u {i} minus {j}
    std::set<Edge> required(g.edges().begin(), g.edges().end());
    for (int k : g.neighbors(i))
        if (k != j) required.insert({std::min(j, k), std::max(j, k)});
    required.insert({std::min(i, j), std::max(i, j)});
    auto rotated_ok = [&](double theta) {
        double c = std::cos(theta), s = std::sin(theta);
        Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
        r(i - 1, i - 1) = c;
        r(i - 1, j - 1) = -s;
        r(j - 1, i - 1) = s;
        r(j - 1, j - 1) = c;
        Eigen::MatrixXd m = r * a.mat() * r.transpose();
        for (auto [p, q] : required)
            if (m(p - 1, q - 1) >= 0) return false;
        return true;
    };
    const double cap = M_PI / 4 * (1 - 1e-12);
    if (rotated_ok(cap)) return M_PI / 4;
    double lo = 0, hi = cap;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (rotated_ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

SymMatrix givens_rotate(const SymMatrix& a, const RotationStep& step, const Tolerances& tol) {
    tol.validate();
    int n = a.n();
    int i = step.i, j = step.j;
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw input_error("bad rotation indices");
    if (!(step.theta > 0 && step.theta < M_PI / 4))
        throw input_error("rotation angle must lie in (0, pi/4)");
    Graph g = pattern_of(a, tol);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            if (g.has_edge(p, q) && a(p - 1, q - 1) > 0)
                throw input_error("matrix has a positive off-diagonal entry");
    // N(i) \ {j} must contain N(j) \ {i}
    for (int k : g.neighbors(j))
        if (k != i && !g.has_edge(i, k))
            throw input_error("rotation hypothesis fails: N(i) does not cover N(j)");
    if (!g.has_edge(i, j) && !(a(i - 1, i - 1) < a(j - 1, j - 1)))
        throw input_error("rotation hypothesis fails: need a_ii < a_jj for non-adjacent i,j");
    double bound = givens_theta_bound(a, i, j, tol);
    if (step.theta > bound)
        throw numeric_error("rotation angle loses sign pattern; admissible bound " + fmt(bound));
    double c = std::cos(step.theta), s = std::sin(step.theta);
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
    r(i - 1, i - 1) = c;
    r(i - 1, j - 1) = -s;
    r(j - 1, i - 1) = s;
    r(j - 1, j - 1) = c;
    return SymMatrix(r * a.mat() * r.transpose());
}

ConstructionResult complete_from_spectrum(const SpectrumSpec& lambda, const Tolerances& tol) {
    tol.validate();
    lambda.validate();
    int n = lambda.total();
    if (n < 1) throw input_error("empty spectrum");
    if (n > 1 && lambda.pairs.front().second != 1)
        throw realizability_error("complete-graph spectra require a simple smallest value");
    std::vector<double> lams = lambda.expand();
    Eigen::MatrixXd m = Eigen::VectorXd::Map(lams.data(), n).asDiagonal();
    std::vector<std::string> prov;
    for (int j = 2; j <= n; ++j) {
        // rotate in the (1, j) plane with theta below the sign and diagonal
        // minimum thresholds
        auto ok = [&](double theta) {
            double c = std::cos(theta), s = std::sin(theta);
            Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
            r(0, 0) = c;
            r(0, j - 1) = -s;
            r(j - 1, 0) = s;
            r(j - 1, j - 1) = c;
            Eigen::MatrixXd t = r * m * r.transpose();
            for (int p = 0; p < j; ++p)
                for (int q = p + 1; q < j; ++q)
                    if (t(p, q) >= 0) return false;
            for (int k = 1; k < n; ++k)
                if (t(0, 0) >= t(k, k)) return false;
            return true;
        };
        double lo = 0, hi = M_PI / 4 * (1 - 1e-12);
        if (ok(hi)) {
            lo = hi;
        } else {
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                (ok(mid) ? lo : hi) = mid;
            }
        }
        double theta = std::min(M_PI / 16, lo / 2);
        if (theta <= 0) throw numeric_error("no admissible rotation angle");
        double c = std::cos(theta), s = std::sin(theta);
        Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
        r(0, 0) = c;
        r(0, j - 1) = -s;
        r(j - 1, 0) = s;
        r(j - 1, j - 1) = c;
        m = r * m * r.transpose();
        m = 0.5 * (m + m.transpose());
        prov.push_back("givens(1," + std::to_string(j) + "," + fmt(theta) + ")");
    }
    return validate_result(SymMatrix(m), catalog("K" + std::to_string(n)),
                           PatternClass::Schrodinger, lams, std::move(prov), tol);
}

ConstructionResult star_realize(int num_leaves, double lo, double mid, double hi,
                                const Tolerances& tol) {
    tol.validate();
    if (num_leaves < 2) throw input_error("star needs at least 2 leaves");
    if (!(lo < mid && mid < hi)) throw input_error("need lo < mid < hi");
    int n = num_leaves + 1;
    double w = std::sqrt((mid - lo) * (hi - mid) / num_leaves);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m(0, 0) = lo + hi - mid;
    for (int k = 1; k < n; ++k) {
        m(k, k) = mid;
        m(0, k) = m(k, 0) = -w;
    }
    std::vector<double> tgt{lo, hi};
    tgt.insert(tgt.end(), num_leaves - 1, mid);
    std::sort(tgt.begin(), tgt.end());
    std::vector<Edge> es;
    for (int k = 2; k <= n; ++k) es.push_back({1, k});
    return validate_result(SymMatrix(m), Graph(n, es), PatternClass::Schrodinger, tgt, {"star"},
                           tol);
}

std::pair<Eigen::VectorXd, SymMatrix> signature_normalize(const SymMatrix& a, const Graph& g,
                                                          const Graph& spanning_tree,
                                                          const Tolerances& tol) {
    tol.validate();
    if (!is_connected(g)) throw input_error("signature_normalize requires a connected graph");
    if (!membership(a, g, PatternClass::Generalized, tol))
        throw input_error("signature_normalize requires a in S(g)");
    if (spanning_tree.n() != g.n() ||
        static_cast<int>(spanning_tree.edges().size()) != g.n() - 1 ||
        !is_connected(spanning_tree))
        throw input_error("not a spanning tree");
    for (auto [u, v] : spanning_tree.edges())
        if (!g.has_edge(u, v)) throw input_error("spanning tree uses a non-edge of g");
    Eigen::VectorXd d = Eigen::VectorXd::Zero(g.n());
    d(0) = 1;
    std::vector<int> stack{1};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : spanning_tree.neighbors(u))
            if (d(w - 1) == 0) {
                // make the conjugated tree entry d_u d_w a_uw negative
                d(w - 1) = a(u - 1, w - 1) > 0 ? -d(u - 1) : d(u - 1);
                stack.push_back(w);
            }
    }
    return {d, SymMatrix(d.asDiagonal() * a.mat() * d.asDiagonal())};
}

namespace {

// Identify the catalog tree isomorphic to t and the vertex map catalog -> t.
std::pair<std::string, std::vector<int>> match_catalog_tree(const Graph& t) {
    static const std::vector<std::string> names = {"P1", "P2", "P3",      "P4", "K1,3",
                                                   "P5", "K1,4", "S(2,1,1)"};
    for (const auto& name : names) {
        Graph c = catalog(name);
        if (c.n() != t.n() || c.edges().size() != t.edges().size()) continue;
        if (auto pi = find_spanning_embedding(c, t)) {
            // spanning embedding of a tree with the same edge count is an isomorphism
            return {name, *pi};
        }
    }
    throw input_error("tree is not in the catalog (n <= 5)");
}

} // namespace

ConstructionResult tree_realize(const SpectrumSpec& lambda, const Graph& tree,
                                const Tolerances& tol) {
    tol.validate();
    lambda.validate();
    auto st = structure_tests(tree);
    if (!st.is_tree) throw input_error("tree_realize requires a tree");
    if (lambda.total() != tree.n()) throw input_error("spectrum size does not match tree order");
    auto [name, pi] = match_catalog_tree(tree);
    OrderedMultiplicityList m = multiplicity_list(lambda);
    auto entry = golden_lookup(name, m);
    if (!entry || !entry->allowed)
        throw realizability_error("multiplicity list " + format_multlist(m) +
                                  " is not allowed on " + name);
    std::vector<double> tgt = lambda.expand();
    Graph cat = catalog(name);
    ConstructionResult base;
    bool all_ones = std::all_of(m.begin(), m.end(), [](int x) { return x == 1; });
    if (all_ones && name[0] == 'P') {
        base = jacobi_from_spectrum(tgt, tol);
    } else if (all_ones) {
        Graph edgeless(cat.n(), {});
        Eigen::MatrixXd d = Eigen::VectorXd::Map(tgt.data(), cat.n()).asDiagonal();
        std::map<Edge, int> signs;
        for (auto e : cat.edges()) signs[e] = -1;
        base = supergraph_extend(SymMatrix(d), edgeless, cat, signs, 1e-2, tol);
    } else if (m.size() == 3 && m[0] == 1 && m[2] == 1 && m[1] == cat.n() - 2) {
        base = star_realize(cat.n() - 1, lambda.pairs[0].first, lambda.pairs[1].first,
                            lambda.pairs[2].first, tol);
    } else if (m.size() == 4) {
        // one double among four groups: star block on three values + isolated vertex
        int dpos = 0;
        for (size_t k = 0; k < m.size(); ++k)
            if (m[k] == 2) dpos = static_cast<int>(k);
        double solo = dpos == 1 ? lambda.pairs[3].first : lambda.pairs[0].first;
        double lo = dpos == 1 ? lambda.pairs[0].first : lambda.pairs[1].first;
        double midv = lambda.pairs[dpos].first;
        double hi = dpos == 1 ? lambda.pairs[2].first : lambda.pairs[3].first;
        ConstructionResult star = star_realize(3, lo, midv, hi, tol);
        // star center on catalog vertex 1 with three of its leaves; spare
        // vertex gets the solo eigenvalue
        std::vector<int> leaves;
        for (int w : cat.neighbors(1)) leaves.push_back(w);
        int spare = 0;
        for (int v = 2; v <= cat.n(); ++v)
            if (std::find(leaves.begin(), leaves.end(), v) == leaves.end()) spare = v;
        if (static_cast<int>(leaves.size()) == 4) {
            spare = leaves.back();
            leaves.pop_back();
        }
        std::vector<int> starverts{1};
        starverts.insert(starverts.end(), leaves.begin(), leaves.end());
        Eigen::MatrixXd solo_m = Eigen::MatrixXd::Constant(1, 1, solo);
        SymMatrix block = block_embed(
            cat.n(), {{starverts, star.matrix}, {{spare}, SymMatrix(solo_m)}});
        std::vector<Edge> base_edges;
        for (size_t k = 0; k < leaves.size(); ++k)
            base_edges.push_back({std::min(1, leaves[k]), std::max(1, leaves[k])});
        Graph baseg(cat.n(), base_edges);
        std::map<Edge, int> signs;
        for (auto e : cat.edges())
            if (!baseg.has_edge(e.first, e.second)) signs[e] = -1;
        base = supergraph_extend(block, baseg, cat, signs, 1e-2, tol);
    } else {
        throw realizability_error("no construction route for list " + format_multlist(m) +
                                  " on " + name);
    }
    // settle into the negative class on the caller's labeling
    SymMatrix placed = base.matrix.permuted(pi);
    auto [d, normalized] = signature_normalize(placed, tree, st.spanning_tree, tol);
    auto prov = base.provenance;
    prov.push_back("signature");
    return validate_result(normalized, tree, PatternClass::Schrodinger, tgt, std::move(prov),
                           tol);
}

ConstructionResult unicyclic_normalize(const SymMatrix& a, const Graph& g,
                                       const Tolerances& tol) {
    tol.validate();
    auto st = structure_tests(g);
    if (!st.connected || !st.is_unicyclic_odd)
        throw input_error("unicyclic_normalize requires a connected odd unicyclic graph");
    if (!membership(a, g, PatternClass::Generalized, tol))
        throw input_error("unicyclic_normalize requires a in S(g)");
    double p = 1;
    for (auto [u, v] : unicycle_edges(g)) p *= a(u - 1, v - 1);
    if (p > 0) {
        auto spec = spectrum(a, tol);
        if (spec.pairs.back().second >= 2)
            throw numeric_error("positive cycle product with a multiple largest eigenvalue "
                                "contradicts the odd-unicyclic sign argument");
        throw input_error("cycle product positive: only -A normalizes into the negative class");
    }
    auto [d, b] = signature_normalize(a, g, st.spanning_tree, tol);
    return validate_result(b, g, PatternClass::Schrodinger, sorted_eigenvalues(a),
                           {"unicyclic-signature"}, tol);
}

namespace {

struct PatternTarget {
    const Graph* graph;
    std::map<Edge, int> required_signs; // +1 / -1 on edges; absent = free
};

std::optional<Eigen::MatrixXd> lift_project(Eigen::MatrixXd b, const std::vector<double>& target,
                                            const PatternTarget& pat, int cap, double inner_tol,
                                            double* out_dev) {
    int n = static_cast<int>(b.rows());
    Eigen::VectorXd lam = Eigen::Map<const Eigen::VectorXd>(target.data(), n);
    const Graph& g = *pat.graph;
    double clamp = 1e-8;
    double dev = 0;
    for (int it = 0; it < cap; ++it) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
        if (es.info() != Eigen::Success) return std::nullopt;
        b = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
        b = 0.5 * (b + b.transpose());
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (!g.has_edge(i, j)) {
                    b(i - 1, j - 1) = b(j - 1, i - 1) = 0;
                } else if (auto it2 = pat.required_signs.find({i, j});
                           it2 != pat.required_signs.end()) {
                    double s = it2->second;
                    if (s * b(i - 1, j - 1) < clamp)
                        b(i - 1, j - 1) = b(j - 1, i - 1) = s * clamp;
                }
            }
        dev = spectral_deviation(b, target);
        if (dev <= inner_tol) {
            if (out_dev) *out_dev = dev;
            return b;
        }
    }
    if (out_dev) *out_dev = dev;
    return std::nullopt;
}

std::map<Edge, int> sign_preserving(const SymMatrix& a, const Graph& g, const Tolerances& tol) {
    std::map<Edge, int> req;
    for (auto [i, j] : g.edges())
        if (std::abs(a(i - 1, j - 1)) >= tol.sign_floor)
            req[{i, j}] = a(i - 1, j - 1) > 0 ? 1 : -1;
    return req;
}

PatternClass class_of(const SymMatrix& a, const Graph& g, const Tolerances& tol) {
    return membership(a, g, PatternClass::Schrodinger, tol) ? PatternClass::Schrodinger
                                                            : PatternClass::Generalized;
}

} // namespace

ConstructionResult supergraph_extend(const SymMatrix& a, const Graph& g, const Graph& h,
                                     const std::map<Edge, int>& signs, double delta,
                                     const Tolerances& tol) {
    tol.validate();
    if (delta <= 0) throw input_error("delta must be positive");
    if (h.n() != g.n()) throw input_error("supergraph must keep the vertex set");
    for (auto e : g.edges())
        if (!h.has_edge(e.first, e.second)) throw input_error("h is not a supergraph of g");
    if (!membership(a, g, PatternClass::Generalized, tol))
        throw input_error("supergraph_extend requires a in S(g)");
    if (!has_ssp(a, g, tol))
        throw input_error("supergraph_extend requires the strong spectral property");
    std::vector<Edge> new_edges;
    for (auto e : h.edges())
        if (!g.has_edge(e.first, e.second)) new_edges.push_back(e);
    for (auto e : new_edges)
        if (!signs.count(e))
            throw input_error("missing sign for new edge (" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + ")");
    std::vector<double> target = sorted_eigenvalues(a);
    if (new_edges.empty())
        return validate_result(a, h, class_of(a, h, tol), target, {"identity"}, tol);

    PatternTarget pat;
    pat.graph = &h;
    pat.required_signs = sign_preserving(a, g, tol);
    std::ostringstream tag;
    tag << "supergraph{";
    for (size_t k = 0; k < new_edges.size(); ++k) {
        auto e = new_edges[k];
        pat.required_signs[e] = signs.at(e) >= 0 ? 1 : -1;
        tag << (k ? "," : "") << e.first << e.second;
    }
    tag << "}";
    double inner = std::min(1e-10, tol.residual);
    double step = delta / (2 * std::sqrt(2.0 * new_edges.size()));
    for (int attempt = 0; attempt < 20; ++attempt, step /= 2) {
        Eigen::MatrixXd seed = a.mat();
        for (auto e : new_edges) {
            double v = (signs.at(e) >= 0 ? 1 : -1) * step;
            seed(e.first - 1, e.second - 1) = seed(e.second - 1, e.first - 1) = v;
        }
        double dev = 0;
        auto b = lift_project(seed, target, pat, 500, inner, &dev);
        if (!b) continue;
        if ((*b - a.mat()).norm() > delta) continue;
        return validate_result(SymMatrix(*b), h, class_of(SymMatrix(*b), h, tol), target,
                               {tag.str()}, tol);
    }
    throw numeric_error("supergraph extension did not converge");
}

ConstructionResult liberate(const SymMatrix& a, const Graph& g, const std::vector<Edge>& beta,
                            const Eigen::VectorXd& x, double delta, const Tolerances& tol) {
    tol.validate();
    if (delta <= 0) throw input_error("delta must be positive");
    if (x.size() != static_cast<Eigen::Index>(beta.size()))
        throw input_error("direction size does not match beta");
    if (!is_liberation_set(a, g, beta, tol))
        throw input_error("beta is not a liberation set of a");
    std::vector<Edge> es(g.edges());
    for (auto [u, v] : beta) es.push_back({std::min(u, v), std::max(u, v)});
    Graph h(g.n(), es);
    std::vector<double> target = sorted_eigenvalues(a);
    PatternTarget pat;
    pat.graph = &h;
    pat.required_signs = sign_preserving(a, g, tol);
    std::ostringstream tag;
    tag << "liberate{";
    for (size_t k = 0; k < beta.size(); ++k) {
        if (std::abs(x(k)) < tol.sign_floor) throw input_error("direction vanishes on beta");
        pat.required_signs[{std::min(beta[k].first, beta[k].second),
                            std::max(beta[k].first, beta[k].second)}] = x(k) > 0 ? 1 : -1;
        tag << (k ? "," : "") << beta[k].first << beta[k].second;
    }
    tag << "}";
    double inner = std::min(1e-10, tol.residual);
    double xnorm = std::sqrt(2.0) * x.norm();
    double step = delta / (2 * xnorm);
    for (int attempt = 0; attempt < 20; ++attempt, step /= 2) {
        Eigen::MatrixXd seed = a.mat();
        for (size_t k = 0; k < beta.size(); ++k) {
            auto [u, v] = beta[k];
            seed(u - 1, v - 1) = seed(v - 1, u - 1) = step * x(k);
        }
        double dev = 0;
        auto b = lift_project(seed, target, pat, 500, inner, &dev);
        if (!b) continue;
        if ((*b - a.mat()).norm() > delta) continue;
        return validate_result(SymMatrix(*b), h, class_of(SymMatrix(*b), h, tol), target,
                               {tag.str()}, tol);
    }
    throw numeric_error("liberation did not converge");
}

namespace {

ConstructionResult bifurcate_to(const SymMatrix& a, const Graph& g,
                                const std::vector<double>& target_sorted,
                                const Tolerances& tol) {
    if (!membership(a, g, PatternClass::Generalized, tol))
        throw input_error("bifurcate requires a in S(g)");
    if (!has_ssp(a, g, tol)) throw input_error("bifurcate requires the strong spectral property");
    if (static_cast<int>(target_sorted.size()) != a.n())
        throw input_error("target spectrum size mismatch");
    PatternTarget pat;
    pat.graph = &g;
    pat.required_signs = sign_preserving(a, g, tol);
    double inner = std::min(1e-10, tol.residual);
    auto b = lift_project(a.mat(), target_sorted, pat, 500, inner, nullptr);
    if (!b)
        throw numeric_error("bifurcation step too large: continue through nearby spectra");
    return validate_result(SymMatrix(*b), g, class_of(SymMatrix(*b), g, tol), target_sorted,
                           {"bifurcate"}, tol);
}

} // namespace

ConstructionResult bifurcate(const SymMatrix& a, const Graph& g, const SpectrumSpec& target,
                             const Tolerances& tol) {
    tol.validate();
    target.validate();
    return bifurcate_to(a, g, target.expand(), tol);
}

ConstructionResult continue_spectrum(const SymMatrix& a, const Graph& g,
                                     const SpectrumSpec& target, int max_legs,
                                     const Tolerances& tol) {
    tol.validate();
    target.validate();
    std::vector<double> src = sorted_eigenvalues(a);
    std::vector<double> dst = target.expand();
    if (src.size() != dst.size()) throw input_error("target spectrum size mismatch");
    for (int legs = 1; legs <= max_legs; legs *= 2) {
        try {
            SymMatrix cur = a;
            ConstructionResult res;
            for (int k = 1; k <= legs; ++k) {
                double t = static_cast<double>(k) / legs;
                std::vector<double> mid(src.size());
                for (size_t i = 0; i < src.size(); ++i) mid[i] = (1 - t) * src[i] + t * dst[i];
                res = bifurcate_to(cur, g, mid, tol);
                cur = res.matrix;
            }
            res.provenance = {"continuation(" + std::to_string(legs) + ")"};
            return res;
        } catch (const numeric_error&) {
            // retry with shorter legs
        }
    }
    throw numeric_error("spectral continuation failed");
}

ConstructionResult firework(const ConstructionResult& b, int p, const std::vector<double>& extra,
                            const Tolerances& tol) {
    tol.validate();
    if (!b.ssp) throw input_error("firework requires a base with the strong spectral property");
    if (!is_connected(b.graph)) throw input_error("firework base graph must be connected");
    auto bspec = spectrum(b.matrix, tol);
    int q = static_cast<int>(bspec.pairs.size());
    if (p < q - 1) throw input_error("path length must be at least q - 1");
    if (static_cast<int>(extra.size()) != p - q + 1)
        throw input_error("need exactly p - q + 1 extra values");
    int h = b.graph.n();
    int n = p + h;
    // path spectrum: non-minimal base values plus the extras, all distinct
    std::vector<double> omega;
    for (int k = 1; k < q; ++k) omega.push_back(bspec.pairs[k].first);
    omega.insert(omega.end(), extra.begin(), extra.end());
    std::vector<double> allvals = omega;
    allvals.push_back(bspec.pairs[0].first);
    std::sort(allvals.begin(), allvals.end());
    for (size_t i = 0; i + 1 < allvals.size(); ++i)
        if (allvals[i + 1] - allvals[i] <= tol.eig_gap * std::max(1.0, std::abs(allvals[i])))
            throw input_error("firework values must be pairwise distinct");

    std::vector<Edge> base_edges;
    for (int i = 1; i < p; ++i) base_edges.push_back({i, i + 1});
    for (auto [u, v] : b.graph.edges()) base_edges.push_back({u + p, v + p});
    Graph base(n, base_edges);
    Eigen::MatrixXd m0 = Eigen::MatrixXd::Zero(n, n);
    if (p == 1) {
        m0(0, 0) = omega[0];
    } else {
        m0.topLeftCorner(p, p) = jacobi_from_spectrum(omega, tol).matrix.mat();
    }
    m0.bottomRightCorner(h, h) = b.matrix.mat();
    SymMatrix a0(m0);

    // direction: entrywise-negative eigenvector of the smallest base eigenvalue
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.matrix.mat());
    Eigen::VectorXd b1 = es.eigenvectors().col(0);
    int imax;
    b1.cwiseAbs().maxCoeff(&imax);
    if (b1(imax) > 0) b1 = -b1;
    std::vector<Edge> beta;
    for (int k = 1; k <= h; ++k) beta.push_back({p, p + k});

    auto res = liberate(a0, base, beta, b1, 1e-2, tol);
    res.provenance.insert(res.provenance.begin(), "firework(p=" + std::to_string(p) + ")");
    return res;
}

SymMatrix family_bfly(double x) {
    if (!(x > 0)) throw input_error("family_bfly requires x > 0");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(5, 5);
    double s = x / std::sqrt(2.0);
    m(4, 4) = -2 * x * x;
    for (int k = 0; k < 4; ++k) {
        m(k, k) = -0.5;
        m(4, k) = m(k, 4) = -s;
    }
    m(0, 1) = m(1, 0) = -0.5;
    m(2, 3) = m(3, 2) = -0.5;
    return SymMatrix(m);
}

SymMatrix family_k23(double a, double b, double c) {
    if (std::abs(b) < 1e-12) throw input_error("family_k23 requires b != 0");
    if (std::abs(c) < 1e-12 || std::abs(std::abs(c) - 1) < 1e-12)
        throw input_error("family_k23 requires c not in {0, +1, -1}");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(5, 5);
    m(0, 0) = -a;
    m(1, 1) = a * c * c;
    for (int k = 2; k < 5; ++k) {
        m(0, k) = m(k, 0) = -b;
        m(1, k) = m(k, 1) = -b * c;
    }
    return SymMatrix(m);
}

SymMatrix affine_shift_scale(const SymMatrix& a, double p, double q) {
    if (!(p > 0)) throw input_error("affine scale must be positive");
    Eigen::MatrixXd m = p * a.mat();
    m.diagonal().array() += q;
    return SymMatrix(m);
}

namespace {

std::vector<double> cubic_real_roots(double c2, double c1, double c0) {
    // roots of x^3 + c2 x^2 + c1 x + c0 via the companion matrix
    Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
    comp(1, 0) = comp(2, 1) = 1;
    comp(0, 2) = -c0;
    comp(1, 2) = -c1;
    comp(2, 2) = -c2;
    Eigen::EigenSolver<Eigen::Matrix3d> es(comp);
    std::vector<double> out;
    for (int k = 0; k < 3; ++k)
        if (std::abs(es.eigenvalues()(k).imag()) < 1e-9)
            out.push_back(es.eigenvalues()(k).real());
    return out;
}

} // namespace

ConstructionResult cycle5_realize_122(double l1, double l2, double l3, const Tolerances& tol) {
    tol.validate();
    if (!(l1 < l2 && l2 < l3)) throw input_error("need l1 < l2 < l3");
    Graph g = catalog("C5");
    std::vector<double> tgt{l1, l2, l2, l3, l3};
    double s1 = l1 + l2 + l3, s2 = l1 * l2 + l1 * l3 + l2 * l3, s3 = l1 * l2 * l3;
    ConstructionResult fallback;
    bool have_fallback = false;
    // scan the free diagonal parameter of the reflection-symmetric family
    for (int scan = 0; scan <= 40; ++scan) {
        double t = (scan + 0.5) / 41.0;
        double d2 = l2 + t * (l3 - l2);
        double b2 = (d2 - l2) * (l3 - d2);
        if (b2 <= 0) continue;
        double sig = s1 - d2;
        for (double e3 : cubic_real_roots(-(sig + d2), 2 * b2 + s2, -b2 * sig - s3)) {
            double d1 = sig - e3;
            double alpha2 = d1 * d2 + d1 * e3 + d2 * e3 - b2 - s2;
            if (alpha2 <= 0) continue;
            double c = (l2 + l3 - d2 - e3) / 2;
            if (c <= 0) continue;
            double d3 = e3 + c;
            double a = std::sqrt(alpha2 / 2), b = std::sqrt(b2);
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(5, 5);
            m.diagonal() << d1, d2, d3, d3, d2;
            m(0, 1) = m(1, 0) = -a;
            m(0, 4) = m(4, 0) = -a;
            m(1, 2) = m(2, 1) = -b;
            m(3, 4) = m(4, 3) = -b;
            m(2, 3) = m(3, 2) = -c;
            SymMatrix sym(m);
            if (spectral_deviation(m, tgt) > tol.residual) continue;
            if (!membership(sym, g, PatternClass::Schrodinger, tol)) continue;
            auto res = validate_result(sym, g, PatternClass::Schrodinger, tgt,
                                       {"cycle-symmetric-122"}, tol);
            if (res.ssp) return res;
            fallback = res;
            have_fallback = true;
        }
    }
    if (have_fallback) return fallback;
    throw numeric_error("no symmetric realization found for the 122 cycle spectrum");
}

ConstructionResult camp_realize_122(double l1, double l2, double l3, const Tolerances& tol) {
    tol.validate();
    if (!(l1 < l2 && l2 < l3)) throw input_error("need l1 < l2 < l3");
    Graph g = catalog("Camp");
    std::vector<double> tgt{l1, l2, l2, l3, l3};
    ConstructionResult fallback;
    bool have_fallback = false;
    for (int scan = 0; scan < 19; ++scan) {
        double s = 0.05 + 0.05 * scan;
        // eigenvector masses at the trailing corner pin the corner entry to l2
        Eigen::VectorXd start(3);
        start << std::sqrt(s * (l3 - l2) / (l3 - l1)), std::sqrt(1 - s),
            std::sqrt(s * (l2 - l1) / (l3 - l1));
        Eigen::MatrixXd j = lanczos_tridiag({l1, l2, l3}, start);
        j = j.reverse().eval(); // corner entry l2 moves to (3,3)
        j = flip_offdiagonals_negative(j);
        double j11 = j(0, 0), j22 = j(1, 1);
        double o1 = -j(0, 1), o2 = -j(1, 2);
        double e12 = (l3 - j11) / 2;
        if (e12 <= 0 || o1 <= 0 || o2 <= 0) continue;
        double d1 = (l3 + j11) / 2;
        double u = o1 / std::sqrt(2.0), w = o2 / std::sqrt(2.0);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(5, 5);
        m.diagonal() << d1, d1, j22, l2, l2;
        m(0, 1) = m(1, 0) = -e12;
        m(0, 2) = m(2, 0) = -u;
        m(1, 2) = m(2, 1) = -u;
        m(2, 3) = m(3, 2) = -w;
        m(2, 4) = m(4, 2) = -w;
        SymMatrix sym(m);
        if (spectral_deviation(m, tgt) > tol.residual) continue;
        if (!membership(sym, g, PatternClass::Schrodinger, tol)) continue;
        auto res =
            validate_result(sym, g, PatternClass::Schrodinger, tgt, {"camp-symmetric-122"}, tol);
        if (res.ssp) return res;
        fallback = res;
        have_fallback = true;
    }
    if (have_fallback) return fallback;
    throw numeric_error("no symmetric realization found for the 122 spectrum on Camp");
}

ConstructionResult bfly_realize_113(double lo, double mid, double hi, const Tolerances& tol) {
    tol.validate();
    if (!(lo < mid && mid < hi)) throw input_error("need lo < mid < hi");
    // affine image of the factor family: spectrum {-2x^2-1, -1, 0^3}
    double p = hi - mid;
    double r = (hi - lo) / (hi - mid);
    double x = std::sqrt((r - 1) / 2);
    SymMatrix m = affine_shift_scale(SymMatrix(family_bfly(x)), p, hi);
    std::vector<double> tgt{lo, mid, hi, hi, hi};
    return validate_result(m, catalog("Bfly"), PatternClass::Schrodinger, tgt,
                           {"family_bfly(x=" + fmt(x) + ")", "affine"}, tol);
}

ConstructionResult k23_realize_131(double lo, double mid, double hi, const Tolerances& tol) {
    tol.validate();
    if (!(lo < mid && mid < hi)) throw input_error("need lo < mid < hi");
    // shift the triple eigenvalue to zero, then solve for the family parameters
    double am = lo - mid, ap = hi - mid;
    double s = am + ap, prod = -am * ap; // prod = |am * ap| > 0
    double c = 2;
    while ((c * c - 1) * (c * c - 1) * prod <= s * s * c * c * 1.01) c *= 2;
    double a = s / (c * c - 1);
    double b2 = (prod - a * a * c * c) / (3 * (1 + c * c));
    if (b2 <= 0) throw numeric_error("parameter solve failed for the 131 family");
    double b = std::sqrt(b2);
    SymMatrix m = affine_shift_scale(SymMatrix(family_k23(a, b, c)), 1.0, mid);
    std::vector<double> tgt{lo, mid, mid, mid, hi};
    return validate_result(m, catalog("K2,3"), PatternClass::Schrodinger, tgt,
                           {"family_k23(a=" + fmt(a) + ",b=" + fmt(b) + ",c=" + fmt(c) + ")",
                            "affine"},
                           tol);
}

std::optional<ConstructionResult> random_realize(const Graph& g, const SpectrumSpec& target,
                                                 uint64_t seed, int attempts,
                                                 const Tolerances& tol) {
    tol.validate();
    target.validate();
    int n = g.n();
    if (target.total() != n) throw input_error("spectrum size does not match graph order");
    std::vector<double> tgt = target.expand();
    Eigen::VectorXd lam = Eigen::Map<const Eigen::VectorXd>(tgt.data(), n);
    PatternTarget pat;
    pat.graph = &g;
    for (auto e : g.edges()) pat.required_signs[e] = -1;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0, 1);
    for (int att = 0; att < attempts; ++att) {
        Eigen::MatrixXd r(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r(i, j) = gauss(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(r);
        Eigen::MatrixXd q = qr.householderQ();
        Eigen::MatrixXd seed_m = q * lam.asDiagonal() * q.transpose();
        seed_m = 0.5 * (seed_m + seed_m.transpose());
        auto b = lift_project(seed_m, tgt, pat, 500, std::min(1e-10, tol.residual), nullptr);
        if (!b) continue;
        try {
            return validate_result(SymMatrix(*b), g, PatternClass::Schrodinger, tgt,
                                   {"random-isospectral(" + std::to_string(att) + ")"}, tol);
        } catch (const numeric_error&) {
            continue;
        }
    }
    return std::nullopt;
}

SymMatrix block_embed(int n, const std::vector<std::pair<std::vector<int>, SymMatrix>>& parts) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    std::vector<bool> used(n + 1, false);
    for (const auto& [verts, block] : parts) {
        if (static_cast<int>(verts.size()) != block.n())
            throw input_error("block size does not match vertex list");
        for (int v : verts) {
            if (v < 1 || v > n || used[v]) throw input_error("bad block vertex list");
            used[v] = true;
        }
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = 0; b < verts.size(); ++b)
                m(verts[a] - 1, verts[b] - 1) = block(static_cast<int>(a), static_cast<int>(b));
    }
    return SymMatrix(m);
}

} // namespace ieps
