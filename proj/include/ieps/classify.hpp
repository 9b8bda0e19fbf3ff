#ifndef IEPS_CLASSIFY_HPP
#define IEPS_CLASSIFY_HPP

#include "ieps/construct.hpp"
#include "ieps/golden.hpp"

namespace ieps {

enum class ForbiddenRule { PF, Diam, Bip, BipV, Ferguson, Cut, NotInS };

struct RuleHit {
    ForbiddenRule rule;
    int k = 0; // deletion count for BipV
    std::string text() const;
    // tag as used in the committed tables ("PF", "Ferguson", "bip", "diam", "cut", "NotInS")
    std::string table_tag() const;
};

// Necessary-condition filters; purely structural, no numerics.
std::optional<RuleHit> filter_pf(const Graph& g, const OrderedMultiplicityList& m);
std::optional<RuleHit> filter_diam(const Graph& g, const OrderedMultiplicityList& m);
std::optional<RuleHit> filter_bip(const Graph& g, const OrderedMultiplicityList& m);
// Cycle spectra alternation check; apply to cycle graphs only.
std::optional<RuleHit> filter_ferguson(const OrderedMultiplicityList& m, int n);
std::optional<RuleHit> filter_cut(const Graph& g, const OrderedMultiplicityList& m);

// Filters in the order the committed tables attribute rules:
// PF, Ferguson (cycles), bipartite rules, diameter, cut-vertex.
std::optional<RuleHit> run_filters(const Graph& g, const OrderedMultiplicityList& m);

enum class Verdict { Allowed, Forbidden, Undecided };
std::string verdict_name(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Undecided;
    std::optional<RuleHit> rule;
    std::optional<ConstructionResult> witness;
    bool ssp_note = false; // list realizable only without the SSP
    std::string probe_summary;
};

struct DecideOptions {
    uint64_t seed = 0;
    Tolerances tol;
    int probe_samples = 0; // spectrally-arbitrary probing (0 = off)
    int budget = 3;        // random fallback attempts for the constructive step
};

Certificate decide(const std::string& graph_name, const OrderedMultiplicityList& m,
                   const DecideOptions& opt = {});

// Deterministic witness spectrum for a list (values 0, 1, ..., q-1).
SpectrumSpec default_spectrum(const OrderedMultiplicityList& m);

struct TableLine {
    std::string graph;
    std::string list;
    Verdict verdict = Verdict::Undecided;
    std::string rule_or_residual; // rule tag or witness residual
    std::string ssp;              // "true" / "false" / "-"
};

struct TableReport {
    std::vector<TableLine> lines;
    std::vector<std::string> diffs; // empty on success
    std::string text() const;       // tab-separated, one line per (graph, list)
};

// Reproduce every verdict of the committed tables; jobs <= 0 uses the
// hardware concurrency.
TableReport reproduce_tables(uint64_t seed = 0, int jobs = 0, const Tolerances& tol = {});

} // namespace ieps

#endif
