// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "ieps/catalog.hpp"
#include "ieps/classify.hpp"
#include "ieps/rng.hpp"

using namespace ieps;

namespace {

int failures = 0;

void criterion(int num, const std::string& label, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
        err = body();
    } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (err.empty()) {
        std::printf("PASS  criterion %2d: %s (%lld ms)\n", num, label.c_str(),
                    static_cast<long long>(ms));
    } else {
        ++failures;
        std::printf("FAIL  criterion %2d: %s -- %s\n", num, label.c_str(), err.c_str());
    }
    std::fflush(stdout);
}

SymMatrix random_sdot(const Graph& g, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> wdist(0.2, 2.0), ddist(-1.0, 1.0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.n(), g.n());
    for (auto [u, v] : g.edges()) m(u - 1, v - 1) = m(v - 1, u - 1) = -wdist(rng);
    for (int i = 0; i < g.n(); ++i) m(i, i) = ddist(rng);
    return SymMatrix(m);
}

SymMatrix random_generalized(const Graph& g, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> wdist(0.2, 2.0), ddist(-1.0, 1.0);
    std::bernoulli_distribution coin;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.n(), g.n());
    for (auto [u, v] : g.edges()) {
        double w = coin(rng) ? wdist(rng) : -wdist(rng);
        m(u - 1, v - 1) = m(v - 1, u - 1) = w;
    }
    for (int i = 0; i < g.n(); ++i) m(i, i) = ddist(rng);
    return SymMatrix(m);
}

bool ssp_brute(const SymMatrix& a, const Graph& g, const Tolerances& tol) {
    int n = a.n();
    std::vector<Edge> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    int np = static_cast<int>(pairs.size());
    std::vector<Eigen::VectorXd> rows;
    for (int k = 0; k < np; ++k)
        if (g.has_edge(pairs[k].first, pairs[k].second)) {
            Eigen::VectorXd r = Eigen::VectorXd::Zero(np);
            r(k) = 1;
            rows.push_back(r);
        }
    for (auto [p, q] : pairs) {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(np);
        for (int k = 0; k < np; ++k) {
            auto [i, j] = pairs[k];
            Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
            x(i - 1, j - 1) = x(j - 1, i - 1) = 1;
            r(k) = (a.mat() * x - x * a.mat())(p - 1, q - 1);
        }
        rows.push_back(r);
    }
    Eigen::MatrixXd sys(rows.size(), np);
    for (size_t r = 0; r < rows.size(); ++r) sys.row(r) = rows[r];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) >= tol.rank_rel * svd.singularValues()(0)) ++rank;
    return rank == np;
}

bool ferguson_brute(const OrderedMultiplicityList& m) {
    int n = std::accumulate(m.begin(), m.end(), 0);
    for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
        bool ok = true;
        for (int p = 1; p < n; ++p)
            if (((bits >> (p - 1)) & 1) && p % 2 == 1) ok = false;
        if (!ok) continue;
        OrderedMultiplicityList groups;
        int run = 1;
        for (int p = 1; p < n; ++p) {
            if ((bits >> (p - 1)) & 1)
                ++run;
            else {
                groups.push_back(run);
                run = 1;
            }
        }
        groups.push_back(run);
        if (groups == m) return true;
    }
    return false;
}

void all_lists(int n, OrderedMultiplicityList& cur,
               const std::function<void(const OrderedMultiplicityList&)>& fn) {
    if (n == 0) {
        fn(cur);
        return;
    }
    for (int k = 1; k <= n; ++k) {
        cur.push_back(k);
        all_lists(n - k, cur, fn);
        cur.pop_back();
    }
}

std::string fmt_count(int bad, int total, const std::string& what) {
    if (bad == 0) return "";
    return std::to_string(bad) + "/" + std::to_string(total) + " " + what;
}

} // namespace

int main() {
    Tolerances tol;

    criterion(1, "table reproduction with zero diffs", [&]() -> std::string {
        auto report = reproduce_tables(0, 0, tol);
        if (!report.diffs.empty()) {
            std::string msg = std::to_string(report.diffs.size()) + " diffs; first: ";
            return msg + report.diffs.front();
        }
        int nossp = 0;
        for (auto& l : report.lines)
            if (l.ssp == "false") ++nossp;
        if (nossp != 2) return "expected exactly 2 no-SSP rows, saw " + std::to_string(nossp);
        return "";
    });

    criterion(2, "path realizer: 100 seeded spectra, n in 2..8", [&]() -> std::string {
        auto rng = make_rng(1002);
        std::uniform_real_distribution<double> gap(0.05, 1.5);
        int bad = 0;
        for (int t = 0; t < 100; ++t) {
            int n = 2 + t % 7;
            std::vector<double> lams(n);
            double x = -4 * gap(rng);
            for (int i = 0; i < n; ++i) lams[i] = (x += gap(rng));
            auto res = jacobi_from_spectrum(lams, tol);
            bool ok = res.spectral_residual <= 1e-8 && res.ssp;
            for (int i = 0; i + 1 < n; ++i) ok = ok && res.matrix(i, i + 1) < -1e-10;
            if (!ok) ++bad;
        }
        return fmt_count(bad, 100, "path realizations failed");
    });

    criterion(3, "complete-graph realizer: 50 spectra, n in 2..6", [&]() -> std::string {
        auto rng = make_rng(1003);
        std::uniform_real_distribution<double> gap(0.1, 1.5);
        std::uniform_int_distribution<int> mult(1, 3);
        int bad = 0;
        for (int t = 0; t < 50; ++t) {
            int n = 2 + t % 5;
            SpectrumSpec spec;
            double x = -2;
            int left = n - 1;
            spec.pairs.push_back({x, 1});
            while (left > 0) {
                x += gap(rng);
                int m = std::min(left, mult(rng));
                spec.pairs.push_back({x, m});
                left -= m;
            }
            auto res = complete_from_spectrum(spec, tol);
            bool ok = res.spectral_residual <= 1e-8;
            for (auto [u, v] : res.graph.edges()) ok = ok && res.matrix(u - 1, v - 1) < 0;
            if (!ok) ++bad;
        }
        // multiple smallest value must be rejected
        try {
            complete_from_spectrum(parse_spectrum("0^2,1"), tol);
            return "multiple smallest value was not rejected";
        } catch (const realizability_error&) {
        }
        return fmt_count(bad, 50, "complete realizations failed");
    });

    criterion(4, "Ferguson oracle: exhaustive n in 3..8", [&]() -> std::string {
        int bad = 0, total = 0;
        for (int n = 3; n <= 8; ++n) {
            OrderedMultiplicityList cur;
            all_lists(n, cur, [&](const OrderedMultiplicityList& m) {
                ++total;
                if (filter_ferguson(m, n).has_value() != !ferguson_brute(m)) ++bad;
            });
        }
        return fmt_count(bad, total, "lists disagree");
    });

    criterion(5, "SSP oracle equivalence + signature invariance, 200 samples",
              [&]() -> std::string {
                  auto rng = make_rng(1005);
                  const auto& names = table_graph_names();
                  int bad = 0;
                  for (int t = 0; t < 200; ++t) {
                      Graph g = catalog(names[t % names.size()]);
                      auto a = random_generalized(g, rng);
                      bool via_psi = has_ssp(a, g, tol);
                      if (via_psi != ssp_brute(a, g, tol)) {
                          ++bad;
                          continue;
                      }
                      for (int mask = 0; mask < (1 << g.n()); ++mask) {
                          Eigen::VectorXd d(g.n());
                          for (int i = 0; i < g.n(); ++i) d(i) = (mask >> i) & 1 ? -1 : 1;
                          SymMatrix dad(d.asDiagonal() * a.mat() * d.asDiagonal());
                          if (has_ssp(dad, g, tol) != via_psi) {
                              ++bad;
                              break;
                          }
                      }
                  }
                  return fmt_count(bad, 200, "samples failed");
              });

    criterion(6, "liberation example on cycles, n in {4,5,6}", [&]() -> std::string {
        std::ostringstream problems;
        for (int n : {4, 5, 6}) {
            std::vector<double> vals(n - 1);
            for (int i = 0; i < n - 1; ++i) vals[i] = i;
            auto path = jacobi_from_spectrum(vals, tol);
            for (int k = 1; k <= n - 1; ++k) {
                Eigen::MatrixXd m0 = Eigen::MatrixXd::Zero(n, n);
                m0.topLeftCorner(n - 1, n - 1) = path.matrix.mat();
                m0(n - 1, n - 1) = vals[k - 1];
                std::vector<Edge> base_edges;
                for (int i = 1; i < n - 1; ++i) base_edges.push_back({i, i + 1});
                Graph base(n, base_edges);
                Graph cyc = catalog("C" + std::to_string(n));
                std::vector<Edge> beta{{1, n}, {n - 1, n}};
                SymMatrix a0(m0);
                auto dir = liberation_direction(a0, base, beta, {-1, -1}, tol);
                if (k % 2 == 1) {
                    if (dir) problems << "n=" << n << " k=" << k << " odd double liberated; ";
                    continue;
                }
                if (!dir) {
                    problems << "n=" << n << " k=" << k << " no direction; ";
                    continue;
                }
                auto res = liberate(a0, base, beta, *dir, 1e-2, tol);
                OrderedMultiplicityList want(n - 1, 1);
                want[k - 1] = 2;
                bool ok = membership(res.matrix, cyc, PatternClass::Schrodinger, tol) &&
                          multiplicity_list(spectrum(res.matrix, tol)) == want && res.ssp &&
                          (res.matrix.mat() - m0).norm() <= 1e-2;
                if (!ok) problems << "n=" << n << " k=" << k << " bad output; ";
            }
        }
        return problems.str();
    });

    criterion(7, "firework: K3 {0,1,1} with p = 1 gives {0,1^3} with the SSP",
              [&]() -> std::string {
                  auto k3 = complete_from_spectrum(parse_spectrum("0,1^2"), tol);
                  auto r = firework(k3, 1, {}, tol);
                  if (r.spectral_residual > 1e-8)
                      return "residual " + std::to_string(r.spectral_residual);
                  if (!r.ssp) return "no SSP";
                  if (multiplicity_list(spectrum(r.matrix, tol)) !=
                      OrderedMultiplicityList{1, 3})
                      return "wrong multiplicity list";
                  if (r.graph.edges().size() != 6) return "join graph is not complete";
                  return "";
              });

    criterion(8, "parametric families", [&]() -> std::string {
        auto rng = make_rng(1008);
        std::uniform_real_distribution<double> xs(0.2, 3.0);
        for (int t = 0; t < 10; ++t) {
            double x = xs(rng);
            auto m = family_bfly(x);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat());
            std::vector<double> want{-2 * x * x - 1, -1, 0, 0, 0};
            std::sort(want.begin(), want.end());
            for (int i = 0; i < 5; ++i)
                if (std::abs(es.eigenvalues()(i) - want[i]) > 1e-10)
                    return "bfly spectrum off at x=" + std::to_string(x);
        }
        std::uniform_real_distribution<double> ps(0.3, 2.5);
        for (int t = 0; t < 10; ++t) {
            auto m = SymMatrix(family_k23(ps(rng), ps(rng), 1 + ps(rng)));
            if (!membership(m, catalog("K2,3"), PatternClass::Schrodinger, tol))
                return "k23 membership failed";
            if (multiplicity_list(spectrum(m, tol)) != OrderedMultiplicityList{1, 3, 1})
                return "k23 multiplicity list is not 131";
            if (!has_ssp(m, catalog("K2,3"), tol)) return "k23 SSP failed";
        }
        return "";
    });

    criterion(9, "1000 samples per graph satisfy the smallest-eigenvalue and diameter bounds",
              [&]() -> std::string {
                  auto rng = make_rng(1009);
                  for (const auto& name : table_graph_names()) {
                      Graph g = catalog(name);
                      for (int t = 0; t < 1000; ++t) {
                          auto a = random_sdot(g, rng);
                          auto pf = pf_check(a, g, tol);
                          if (!pf.smallest_simple || !pf.positive_vector)
                              return "Perron-Frobenius violation on " + name;
                          if (!diam_bound_holds(a, g, tol))
                              return "diameter bound violation on " + name;
                      }
                  }
                  return "";
              });

    criterion(10, "laplacian decomposition round-trip, 100 samples", [&]() -> std::string {
        auto rng = make_rng(1010);
        const auto& names = table_graph_names();
        for (int t = 0; t < 100; ++t) {
            Graph g = catalog(names[t % names.size()]);
            auto a = random_sdot(g, rng);
            // shift to a singular positive semidefinite matrix
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.mat(), Eigen::EigenvaluesOnly);
            Eigen::MatrixXd shifted = a.mat();
            shifted.diagonal().array() -= es.eigenvalues()(0);
            SymMatrix psd(shifted);
            auto dec = laplacian_decompose(psd, g, tol);
            Eigen::VectorXd mh = dec.m_diag.cwiseSqrt();
            Eigen::MatrixXd back = mh.cwiseInverse().asDiagonal() * dec.laplacian.mat() *
                                   mh.cwiseInverse().asDiagonal();
            if ((back - shifted).norm() > 1e-9) return "round trip error too large";
            if ((dec.laplacian.mat() * Eigen::VectorXd::Ones(g.n())).cwiseAbs().maxCoeff() >
                1e-9)
                return "row sums not annihilated";
        }
        return "";
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures;
}
