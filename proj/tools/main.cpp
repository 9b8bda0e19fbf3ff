#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ieps/catalog.hpp"
#include "ieps/classify.hpp"

using nlohmann::json;
using namespace ieps;

namespace {

// exit codes: 0 success/allowed, 1 forbidden or realizability error,
// 2 undecided or non-convergence, 3 input error
constexpr int kOk = 0, kForbidden = 1, kUndecided = 2, kInput = 3;

Graph load_graph(const std::string& arg) {
    if (is_catalog_name(arg)) return catalog(arg);
    if (std::filesystem::exists(arg)) return parse_graph_file(arg);
    throw input_error("not a catalog graph name or a readable file: " + arg);
}

void write_outputs(const std::string& out, const ConstructionResult& res) {
    if (out.empty()) return;
    std::ofstream mf(out);
    if (!mf) throw input_error("cannot write " + out);
    mf << format_matrix(res.matrix);
    std::ofstream cf(out + ".cert");
    cf << "class: " << pattern_class_name(res.pattern_class) << "\n";
    cf << "residual: " << res.spectral_residual << "\n";
    cf << "ssp: " << (res.ssp ? "true" : "false") << "\n";
    cf << "provenance: ";
    for (size_t i = 0; i < res.provenance.size(); ++i)
        cf << (i ? "," : "") << res.provenance[i];
    cf << "\n";
}

void print_result(const ConstructionResult& res, const std::string& format,
                  const std::string& out) {
    if (format == "json-lines") {
        json j{{"class", pattern_class_name(res.pattern_class)},
               {"residual", res.spectral_residual},
               {"ssp", res.ssp},
               {"spectrum", format_spectrum(spectrum(res.matrix))},
               {"provenance", res.provenance}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << format_matrix(res.matrix);
        std::cout << "# spectrum " << format_spectrum(spectrum(res.matrix)) << "  residual "
                  << res.spectral_residual << "  ssp " << (res.ssp ? "true" : "false") << "\n";
    }
    write_outputs(out, res);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Schrodinger operator spectra: analyze, construct, classify"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = 0;
    double tol_residual = 0;
    std::string out, format = "text";
    int jobs = 0;
    app.add_option("--seed", seed, "root seed for all randomized steps");
    app.add_option("--tol", tol_residual, "override the residual tolerance");
    app.add_option("--out", out, "write the resulting matrix (plus .cert sidecar)");
    app.add_option("--format", format, "text|json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    app.add_option("--jobs", jobs, "worker count for table reproduction");

    auto* c_spec = app.add_subcommand("spectrum", "clustered spectrum of a matrix file");
    std::string mat_path, graph_arg, class_arg;
    c_spec->add_option("matrix", mat_path)->required();

    auto* c_mem = app.add_subcommand("membership", "pattern class membership");
    c_mem->add_option("matrix", mat_path)->required();
    c_mem->add_option("graph", graph_arg)->required();
    c_mem->add_option("class", class_arg)->required();

    auto* c_ssp =
        app.add_subcommand("check-ssp", "strong spectral property via the verification matrix");
    bool print_psi = false;
    c_ssp->add_option("matrix", mat_path)->required();
    c_ssp->add_option("graph", graph_arg)->required();
    c_ssp->add_flag("--print-psi", print_psi, "also print the verification matrix");

    auto* c_dec = app.add_subcommand("decompose", "M^{-1/2} L M^{-1/2} splitting");
    c_dec->add_option("matrix", mat_path)->required();
    c_dec->add_option("graph", graph_arg)->required();

    auto* c_con = app.add_subcommand("construct", "run a construction recipe");
    std::vector<std::string> con_args;
    c_con->add_option("recipe", con_args)->required()->expected(-1);

    auto* c_d = app.add_subcommand("decide", "classify a (graph, multiplicity list) query");
    std::string list_arg;
    int probe = 0;
    c_d->add_option("graph", graph_arg)->required();
    c_d->add_option("list", list_arg)->required();
    c_d->add_option("--probe", probe, "sampled spectra for the spectrally-arbitrary probe");

    auto* c_tab = app.add_subcommand("tables", "reproduce the realizability tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kInput;
    }

    Tolerances tol;
    if (tol_residual > 0) tol.residual = tol_residual;

    try {
        if (c_spec->parsed()) {
            auto a = parse_matrix_file(mat_path);
            std::cout << format_spectrum(spectrum(a, tol)) << "\n";
            return kOk;
        }
        if (c_mem->parsed()) {
            auto a = parse_matrix_file(mat_path);
            bool in = membership(a, load_graph(graph_arg), parse_pattern_class(class_arg), tol);
            std::cout << (in ? "true" : "false") << "\n";
            return in ? kOk : kForbidden;
        }
        if (c_ssp->parsed()) {
            auto a = parse_matrix_file(mat_path);
            Graph g = load_graph(graph_arg);
            if (print_psi) {
                auto vm = verification_matrix(a, g);
                std::cout << vm.psi.rows() << " " << vm.psi.cols() << "\n";
                for (Eigen::Index r = 0; r < vm.psi.rows(); ++r) {
                    for (Eigen::Index c = 0; c < vm.psi.cols(); ++c)
                        std::cout << (c ? " " : "") << vm.psi(r, c);
                    std::cout << "\n";
                }
            }
            auto rep = ssp_report(a, load_graph(graph_arg), tol);
            if (format == "json-lines") {
                std::cout << json{{"ssp", rep.ssp},
                                  {"rank", rep.rank},
                                  {"nonedges", rep.nonedge_count},
                                  {"smallest_sv", rep.smallest_sv}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << (rep.ssp ? "true" : "false") << " rank " << rep.rank << "/"
                          << rep.nonedge_count << " smallest-sv " << rep.smallest_sv << "\n";
            }
            return rep.ssp ? kOk : kForbidden;
        }
        if (c_dec->parsed()) {
            auto a = parse_matrix_file(mat_path);
            auto d = laplacian_decompose(a, load_graph(graph_arg), tol);
            std::cout << "# M diagonal\n";
            for (int i = 0; i < d.m_diag.size(); ++i)
                std::cout << d.m_diag(i) << (i + 1 < d.m_diag.size() ? " " : "\n");
            std::cout << "# L\n" << format_matrix(d.laplacian);
            return kOk;
        }
        if (c_con->parsed()) {
            if (con_args.empty()) throw input_error("missing recipe");
            const std::string& recipe = con_args[0];
            auto need = [&](size_t k) {
                if (con_args.size() != k + 1)
                    throw input_error("recipe " + recipe + " expects " + std::to_string(k) +
                                      " arguments");
            };
            if (recipe == "path") {
                need(1);
                auto spec = parse_spectrum(con_args[1]);
                print_result(jacobi_from_spectrum(spec.expand(), tol), format, out);
                return kOk;
            }
            if (recipe == "complete") {
                need(1);
                print_result(complete_from_spectrum(parse_spectrum(con_args[1]), tol), format,
                             out);
                return kOk;
            }
            if (recipe == "tree") {
                need(2);
                print_result(tree_realize(parse_spectrum(con_args[2]), load_graph(con_args[1]),
                                          tol),
                             format, out);
                return kOk;
            }
            if (recipe == "bfly") {
                need(1);
                auto m = SymMatrix(family_bfly(std::stod(con_args[1])));
                std::cout << format_matrix(m);
                std::cout << "# spectrum " << format_spectrum(spectrum(m, tol)) << "\n";
                return kOk;
            }
            if (recipe == "k23") {
                need(3);
                auto m = SymMatrix(family_k23(std::stod(con_args[1]), std::stod(con_args[2]),
                                              std::stod(con_args[3])));
                std::cout << format_matrix(m);
                std::cout << "# spectrum " << format_spectrum(spectrum(m, tol)) << "\n";
                return kOk;
            }
            if (recipe == "firework") {
                // firework <h> <base-spectrum> <p> [extra,...]
                if (con_args.size() < 4) throw input_error("firework <h> <base-spectrum> <p> [extras]");
                int h = std::stoi(con_args[1]);
                auto base = complete_from_spectrum(parse_spectrum(con_args[2]), tol);
                (void)h;
                int p = std::stoi(con_args[3]);
                std::vector<double> extra;
                if (con_args.size() > 4)
                    for (auto& pr : parse_spectrum(con_args[4]).pairs)
                        extra.insert(extra.end(), pr.second, pr.first);
                print_result(firework(base, p, extra, tol), format, out);
                return kOk;
            }
            if (recipe == "list") {
                need(2);
                DecideOptions opt;
                opt.seed = seed;
                opt.tol = tol;
                auto cert = decide(con_args[1], parse_multlist(con_args[2]), opt);
                if (cert.verdict != Verdict::Allowed) {
                    std::cout << verdict_name(cert.verdict)
                              << (cert.rule ? " " + cert.rule->text() : "") << "\n";
                    return cert.verdict == Verdict::Forbidden ? kForbidden : kUndecided;
                }
                print_result(*cert.witness, format, out);
                return kOk;
            }
            throw input_error("unknown recipe: " + recipe);
        }
        if (c_d->parsed()) {
            DecideOptions opt;
            opt.seed = seed;
            opt.tol = tol;
            opt.probe_samples = probe;
            auto cert = decide(graph_arg, parse_multlist(list_arg), opt);
            if (format == "json-lines") {
                json j{{"graph", canonical_name(graph_arg)},
                       {"list", list_arg},
                       {"verdict", verdict_name(cert.verdict)}};
                if (cert.rule) j["rule"] = cert.rule->text();
                if (cert.witness) {
                    j["residual"] = cert.witness->spectral_residual;
                    j["ssp"] = cert.witness->ssp;
                }
                if (!cert.probe_summary.empty()) j["probe"] = cert.probe_summary;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << verdict_name(cert.verdict);
                if (cert.rule) std::cout << " " << cert.rule->text();
                if (cert.witness)
                    std::cout << " residual " << cert.witness->spectral_residual << " ssp "
                              << (cert.witness->ssp ? "true" : "false")
                              << (cert.ssp_note ? " (no SSP realization exists)" : "");
                std::cout << "\n";
                if (!cert.probe_summary.empty()) std::cout << cert.probe_summary << "\n";
                if (cert.witness && !out.empty()) write_outputs(out, *cert.witness);
            }
            switch (cert.verdict) {
            case Verdict::Allowed: return kOk;
            case Verdict::Forbidden: return kForbidden;
            case Verdict::Undecided: return kUndecided;
            }
        }
        if (c_tab->parsed()) {
            auto report = reproduce_tables(seed, jobs, tol);
            if (format == "json-lines") {
                for (const auto& l : report.lines)
                    std::cout << json{{"graph", l.graph},
                                      {"list", l.list},
                                      {"verdict", verdict_name(l.verdict)},
                                      {"rule_or_residual", l.rule_or_residual},
                                      {"ssp", l.ssp}}
                                     .dump()
                              << "\n";
            } else {
                std::cout << report.text();
            }
            if (report.diffs.empty()) {
                std::cerr << "tables: " << report.lines.size() << " rows, 0 diffs\n";
                return kOk;
            }
            for (const auto& d : report.diffs) std::cerr << "diff: " << d << "\n";
            return kForbidden;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const realizability_error& e) {
        std::cerr << "not realizable: " << e.what() << "\n";
        return kForbidden;
    } catch (const numeric_error& e) {
        std::cerr << "numeric: " << e.what() << "\n";
        return kUndecided;
    }
    return kInput;
}
