#include "ieps/symmatrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ieps {

SymMatrix::SymMatrix(Eigen::MatrixXd m) {
    if (m.rows() != m.cols()) throw input_error("matrix must be square");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
        throw input_error("matrix is not symmetric (relative asymmetry " +
                          std::to_string(asym / scale) + ")");
    mat_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::submatrix(const std::vector<int>& vertices) const {
    Eigen::MatrixXd out(vertices.size(), vertices.size());
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = 0; b < vertices.size(); ++b) {
            int i = vertices[a], j = vertices[b];
            if (i < 1 || i > n() || j < 1 || j > n()) throw input_error("vertex out of range");
            out(a, b) = mat_(i - 1, j - 1);
        }
    return SymMatrix(out);
}

SymMatrix SymMatrix::without_vertex(int v) const {
    std::vector<int> keep;
    for (int u = 1; u <= n(); ++u)
        if (u != v) keep.push_back(u);
    if (static_cast<int>(keep.size()) == n()) throw input_error("vertex out of range");
    return submatrix(keep);
}

SymMatrix SymMatrix::permuted(const std::vector<int>& pi) const {
    if (static_cast<int>(pi.size()) != n() + 1) throw input_error("permutation size mismatch");
    Eigen::MatrixXd out(n(), n());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) out(pi[i + 1] - 1, pi[j + 1] - 1) = mat_(i, j);
    return SymMatrix(out);
}

int SpectrumSpec::total() const {
    int t = 0;
    for (auto& [v, m] : pairs) t += m;
    return t;
}

std::vector<double> SpectrumSpec::expand() const {
    std::vector<double> out;
    for (auto& [v, m] : pairs) out.insert(out.end(), m, v);
    return out;
}

void SpectrumSpec::validate() const {
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].second < 1) throw input_error("multiplicity must be positive");
        if (i > 0 && !(pairs[i - 1].first < pairs[i].first))
            throw input_error("spectrum values must be strictly increasing");
    }
}

std::string pattern_class_name(PatternClass c) {
    switch (c) {
    case PatternClass::Generalized: return "S";
    case PatternClass::Schrodinger: return "Sdot";
    case PatternClass::WeightedLaplacian: return "SL";
    }
    return "?";
}

PatternClass parse_pattern_class(const std::string& s) {
    if (s == "S" || s == "generalized") return PatternClass::Generalized;
    if (s == "Sdot" || s == "schrodinger") return PatternClass::Schrodinger;
    if (s == "SL" || s == "laplacian") return PatternClass::WeightedLaplacian;
    throw input_error("unknown pattern class: " + s + " (use S, Sdot, or SL)");
}

SpectrumSpec parse_spectrum(const std::string& s) {
    SpectrumSpec spec;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto caret = tok.find('^');
        double v;
        int m = 1;
        try {
            v = std::stod(tok.substr(0, caret));
            if (caret != std::string::npos) m = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw input_error("bad spectrum token: " + tok);
        }
        spec.pairs.push_back({v, m});
    }
    if (spec.pairs.empty()) throw input_error("empty spectrum");
    std::sort(spec.pairs.begin(), spec.pairs.end());
    // merge repeated values: "0,1,1" means {0^1, 1^2}
    std::vector<std::pair<double, int>> merged;
    for (auto& [v, m] : spec.pairs) {
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += m;
        else
            merged.push_back({v, m});
    }
    spec.pairs = std::move(merged);
    spec.validate();
    return spec;
}

namespace {

std::string fmt_double(double v) {
    if (v == 0) v = 0; // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string format_spectrum(const SpectrumSpec& s) {
    std::string out;
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        if (i) out += ",";
        out += fmt_double(s.pairs[i].first) + "^" + std::to_string(s.pairs[i].second);
    }
    return out;
}

std::string format_multlist(const OrderedMultiplicityList& m) {
    std::string out;
    for (int x : m) out += std::to_string(x);
    return out;
}

OrderedMultiplicityList parse_multlist(const std::string& s) {
    OrderedMultiplicityList m;
    for (char c : s) {
        if (c < '1' || c > '9') throw input_error("multiplicity list must be digits 1-9");
        m.push_back(c - '0');
    }
    if (m.empty()) throw input_error("empty multiplicity list");
    return m;
}

SymMatrix parse_matrix(std::istream& in) {
    int n;
    if (!(in >> n) || n < 0) throw input_error("matrix file: missing order");
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> m(i, j))) throw input_error("matrix file: not enough entries");
    return SymMatrix(m);
}

SymMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open matrix file: " + path);
    return parse_matrix(in);
}

std::string format_matrix(const SymMatrix& a) {
    std::ostringstream out;
    out << a.n() << "\n";
    for (int i = 0; i < a.n(); ++i) {
        for (int j = 0; j < a.n(); ++j) {
            if (j) out << " ";
            out << fmt_double(a(i, j));
        }
        out << "\n";
    }
    return out.str();
}

} // namespace ieps
