// qcap: achievable capacities of additive [n,1] codes over Pauli channels,
// computed from coset weight enumerators.

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcap/capacity.hpp"
#include "qcap/cat.hpp"
#include "qcap/code_io.hpp"
#include "qcap/concat.hpp"

using namespace qcap;

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string sci3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string num9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct EnumFlags {
    std::string backend = "auto";
    int shards = 1;
    int max_qubits = 12;

    EnumerationOptions options() const {
        EnumerationOptions o;
        if (backend == "auto") {
            o.backend = KernelBackend::Auto;
        } else if (backend == "scalar") {
            o.backend = KernelBackend::Scalar;
        } else if (backend == "avx2") {
            o.backend = KernelBackend::Avx2;
        } else {
            throw CLI::ValidationError("--backend must be auto, scalar or avx2");
        }
        o.shards = shards;
        o.max_qubits = max_qubits;
        return o;
    }
};

void add_enum_flags(CLI::App* cmd, EnumFlags& flags) {
    cmd->add_option("--backend", flags.backend, "enumeration kernel: auto, scalar or avx2")
        ->capture_default_str();
    cmd->add_option("--shards", flags.shards, "enumeration shards (1 or 16)")
        ->capture_default_str();
    cmd->add_option("--enum-cap", flags.max_qubits, "largest block size to enumerate")
        ->capture_default_str();
}

PauliChannel parse_probs(const std::string& text) {
    std::array<double, 4> p{};
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t used = 0;
        p[static_cast<size_t>(i)] = std::stod(text.substr(pos), &used);
        pos += used;
        if (i < 3) {
            if (pos >= text.size() || text[pos] != ',') {
                throw CLI::ValidationError("--probs needs four comma-separated numbers");
            }
            ++pos;
        }
    }
    if (pos != text.size()) {
        throw CLI::ValidationError("--probs needs exactly four numbers");
    }
    return PauliChannel(p);
}

std::pair<double, double> parse_bracket(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw CLI::ValidationError("bracket must be lo:hi");
    }
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

struct Grid {
    double lo = 0.0, hi = 0.0, step = 0.0;
};

Grid parse_grid(const std::string& text) {
    Grid g;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw CLI::ValidationError("grid must be lo:hi:step");
    }
    g.lo = std::stod(text.substr(0, c1));
    g.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    g.step = std::stod(text.substr(c2 + 1));
    if (!(g.lo >= 0.0 && g.lo < g.hi && g.hi <= 1.0 && g.step > 0.0)) {
        throw CLI::ValidationError("grid needs 0 <= lo < hi <= 1 and step > 0");
    }
    return g;
}

// A scheme evaluated over the depolarizing family. Cat and rotated-cat
// blocks use the closed forms (identical under depolarizing noise); file
// codes are enumerated.
struct Scheme {
    CodeSpec spec;
    std::optional<StabilizerCode> code;  // loaded for file specs

    explicit Scheme(const CodeSpec& s) : spec(s) {
        if (spec.kind == CodeSpec::Kind::File) code = make_code(spec);
    }

    double qss_at(double f, const EnumerationOptions& opts) const {
        if (!code) return cat_qss(spec.p, f).q_ss;
        const auto dist = joint_distribution(
            *code, uniform_assignment(code->n, PauliChannel::depolarizing(f)), opts);
        return shor_smolin_capacity(dist, code->n).q_ss;
    }
};

void print_result(const CapacityResult& res) {
    std::cout << "q_ss                 = " << fixed6(res.q_ss) << "\n"
              << "s_x2                 = " << fixed6(res.s_x2) << "\n"
              << "h_syndrome           = " << fixed6(res.h_syndrome) << "\n"
              << "h_joint              = " << fixed6(res.h_joint) << "\n"
              << "qubits_per_logical   = " << res.p << "\n";
}

double threshold_with_warning(const std::function<double(double)>& cap,
                              const ThresholdOptions& topts) {
    const auto changes = capacity_sign_changes(cap, topts);
    if (changes.empty()) {
        throw std::runtime_error("no capacity sign change in [" + fixed6(topts.f_lo) + ", " +
                                 fixed6(topts.f_hi) + "]");
    }
    if (changes.size() > 1) {
        std::cerr << "note: " << changes.size()
                  << " sign changes in the bracket; reporting the largest:";
        for (const auto& [lo, hi] : changes) {
            std::cerr << " (" << fixed6(lo) << "," << fixed6(hi) << ")";
        }
        std::cerr << "\n";
    }
    return threshold(cap, topts);
}

int cmd_qss(const std::string& code_spec, std::optional<double> f,
            const std::optional<std::string>& probs, const std::string& dump_table,
            const EnumFlags& flags) {
    const auto opts = flags.options();
    const auto spec = parse_code_spec(code_spec);

    CapacityResult res;
    double ie = 0.0;
    std::optional<JointDistribution> dist;
    std::string channel_line;
    if (probs) {
        const PauliChannel channel = parse_probs(*probs);
        const auto code = make_code(spec);
        dist = joint_distribution(code, uniform_assignment(code.n, channel), opts);
        res = shor_smolin_capacity(*dist, code.n);
        ie = coherent_information(*dist, code.n);
        channel_line = "channel: probs " + num9(channel.prob(0)) + "," +
                       num9(channel.prob(1)) + "," + num9(channel.prob(2)) + "," +
                       num9(channel.prob(3));
    } else {
        channel_line = "channel: depolarizing f=" + fixed6(*f);
        if (spec.kind != CodeSpec::Kind::File && spec.p > opts.max_qubits) {
            // closed form; beyond the enumeration cap
            res = cat_qss(spec.p, *f);
            ie = cat_coherent_information(spec.p, *f);
        } else {
            const auto code = make_code(spec);
            dist = joint_distribution(
                code, uniform_assignment(code.n, PauliChannel::depolarizing(*f)), opts);
            res = shor_smolin_capacity(*dist, code.n);
            ie = coherent_information(*dist, code.n);
        }
    }

    if (!dump_table.empty()) {
        if (!dist) {
            throw std::runtime_error("--dump-table needs an enumerated table (block size "
                                     "within --enum-cap)");
        }
        if (dump_table == "-") {  // CSV only
            dist->write_csv(std::cout);
            return 0;
        }
        std::ofstream out(dump_table);
        if (!out) throw std::runtime_error("cannot write " + dump_table);
        dist->write_csv(out);
    }

    std::cout << "code: " << spec.label << "\n" << channel_line << "\n";
    print_result(res);
    std::cout << "coherent_information = " << fixed6(ie) << "\n"
              << "identity_residual    = " << sci3(std::abs(res.q_ss - ie)) << "\n";
    return 0;
}

int cmd_threshold(const std::string& code_spec, const std::string& bracket,
                  const EnumFlags& flags) {
    const auto opts = flags.options();
    const auto spec = parse_code_spec(code_spec);
    const Scheme scheme(spec);
    ThresholdOptions topts;
    std::tie(topts.f_lo, topts.f_hi) = parse_bracket(bracket);
    const double t =
        threshold_with_warning([&](double f) { return scheme.qss_at(f, opts); }, topts);
    std::cout << "code: " << spec.label << "\n"
              << "threshold f = " << fixed6(t) << "\n";
    return 0;
}

int cmd_table(int p_max) {
    std::vector<double> thresholds(static_cast<size_t>(p_max) + 1, 0.0);
    int best_p = 1;
    for (int p = 1; p <= p_max; ++p) {
        thresholds[static_cast<size_t>(p)] =
            threshold([p](double f) { return cat_qss(p, f).q_ss; });
        if (thresholds[static_cast<size_t>(p)] < thresholds[static_cast<size_t>(best_p)]) {
            best_p = p;
        }
    }
    std::cout << "p     threshold\n";
    for (int p = 1; p <= p_max; ++p) {
        std::cout << p << std::string(6 - std::to_string(p).size(), ' ')
                  << fixed6(thresholds[static_cast<size_t>(p)]);
        if (p == best_p) std::cout << "   Best";
        std::cout << "\n";
    }
    std::cout << "inf   " << fixed6(asymptotic_threshold()) << "\n";
    return 0;
}

int cmd_sweep(const std::string& schemes_text, const std::string& grid_text,
              const EnumFlags& flags) {
    const auto opts = flags.options();
    const Grid grid = parse_grid(grid_text);
    std::vector<Scheme> schemes;
    size_t start = 0;
    while (start <= schemes_text.size()) {
        const auto comma = schemes_text.find(',', start);
        const auto piece = schemes_text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        schemes.emplace_back(parse_code_spec(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    std::cout << "f";
    for (const auto& s : schemes) std::cout << "," << s.spec.label;
    std::cout << "\n";
    for (int k = 0;; ++k) {
        const double f = grid.lo + k * grid.step;
        if (f > grid.hi + grid.step * 1e-9) break;
        std::cout << fixed6(std::min(f, grid.hi));
        for (const auto& s : schemes) {
            std::cout << "," << num9(s.qss_at(std::min(f, grid.hi), opts));
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_concat(const std::vector<std::string>& level_specs, std::optional<double> f,
               bool find_threshold, const std::string& bracket, const EnumFlags& flags) {
    const auto opts = flags.options();
    std::vector<ConcatLevel> levels;
    std::cout << "levels (innermost first):";
    for (const auto& text : level_specs) {
        levels.push_back(make_level(parse_code_spec(text)));
        std::cout << " " << text;
    }
    std::cout << "\n";

    if (find_threshold) {
        ThresholdOptions topts;
        std::tie(topts.f_lo, topts.f_hi) = parse_bracket(bracket);
        const double t = threshold_with_warning(
            [&](double ff) { return concatenated_qss(levels, ff, opts).q_ss; }, topts);
        std::cout << "threshold f = " << fixed6(t) << "\n";
        return 0;
    }
    std::cout << "channel: depolarizing f=" << fixed6(*f) << "\n";
    print_result(concatenated_qss(levels, *f, opts));
    return 0;
}

int cmd_search(int n, int trials, double f, uint64_t seed, const EnumFlags& flags) {
    const auto opts = flags.options();
    if (n < 1 || n > 6) {
        throw CLI::ValidationError("search supports 1 <= n <= 6");
    }
    std::cout << "search: n=" << n << " trials=" << trials << " f=" << fixed6(f)
              << " seed=" << seed << "\n";

    const double baseline =
        n == 1 ? hashing_capacity(f)
               : shor_smolin_capacity(
                     joint_distribution(cat_code(n),
                                        uniform_assignment(n, PauliChannel::depolarizing(f)),
                                        opts),
                     n)
                     .q_ss;

    struct Entry {
        double q;
        std::string generators;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<size_t>(trials));
    std::mt19937_64 rng(seed);
    const auto assignment = uniform_assignment(n, PauliChannel::depolarizing(f));
    for (int t = 0; t < trials; ++t) {
        StabilizerCode code = n == 1 ? cat_code(1) : sample_stabilizer_code(n, rng);
        const auto dist = joint_distribution(code, assignment, opts);
        std::string gens;
        for (const auto& g : code.generators) {
            if (!gens.empty()) gens += ",";
            gens += g.str();
        }
        if (gens.empty()) gens = "-";
        entries.push_back({shor_smolin_capacity(dist, n).q_ss, std::move(gens)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.q != b.q) return a.q > b.q;
        return a.generators < b.generators;
    });

    std::cout << "rank  q_ss        generators\n";
    const size_t top = std::min<size_t>(10, entries.size());
    for (size_t i = 0; i < top; ++i) {
        std::string rank = std::to_string(i + 1);
        std::cout << rank << std::string(6 - rank.size(), ' ') << fixed6(entries[i].q)
                  << "    " << entries[i].generators << "\n";
    }
    std::cout << "cat(" << n << ") baseline q_ss = " << fixed6(baseline) << "\n";
    if (!entries.empty() && entries.front().q > baseline + 1e-12) {
        std::cout << "WARNING: a sampled code beats the cat(" << n << ") baseline\n";
        std::cerr << "WARNING: a sampled code beats the cat(" << n << ") baseline\n";
    } else {
        std::cout << "no sampled code beats the cat(" << n << ") baseline\n";
    }
    return 0;
}

struct VerifyReport {
    int passed = 0;
    int failed = 0;

    void record(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        (ok ? passed : failed) += 1;
    }
};

int cmd_verify(bool quick, bool full, const EnumFlags& flags) {
    const auto opts = flags.options();
    VerifyReport report;

    {
        double worst = 0.0;
        for (int p : {2, 3, 5}) {
            for (double f : {0.8, 0.85}) {
                const auto dist = joint_distribution(
                    cat_code(p), uniform_assignment(p, PauliChannel::depolarizing(f)), opts);
                worst = std::max(worst, std::abs(dist.total() - 1.0));
            }
        }
        const auto rnd = random_stabilizer_code(4, 7);
        const auto dist = joint_distribution(
            rnd, uniform_assignment(4, PauliChannel::depolarizing(0.85)), opts);
        worst = std::max(worst, std::abs(dist.total() - 1.0));
        report.record("table normalization", worst < 1e-10, "max deviation " + sci3(worst));
    }
    {
        const int p_hi = quick ? 5 : 7;
        double worst = 0.0;
        for (int p = 2; p <= p_hi; ++p) {
            for (double f : {0.75, 0.81, 0.9}) {
                const auto dist = joint_distribution(
                    cat_code(p), uniform_assignment(p, PauliChannel::depolarizing(f)), opts);
                for (uint32_t i = 0; i < dist.num_syndromes(); ++i) {
                    const auto cls = cat_coset_probs(p, std::popcount(i), f);
                    for (size_t j = 0; j < 4; ++j) {
                        worst = std::max(worst, std::abs(dist.table[i * 4 + j] - cls.probs[j]));
                    }
                }
            }
        }
        report.record("closed form vs brute force (p<=" + std::to_string(p_hi) + ")",
                      worst < 1e-12, "max deviation " + sci3(worst));
    }
    {
        const int codes = quick ? 5 : 20;
        double worst = 0.0;
        for (int p = 1; p <= (quick ? 5 : 7); ++p) {
            for (double f : {0.75, 0.80, 0.81, 0.85, 0.95}) {
                const auto dist = joint_distribution(
                    cat_code(p), uniform_assignment(p, PauliChannel::depolarizing(f)), opts);
                worst = std::max(worst, std::abs(shor_smolin_capacity(dist, p).q_ss -
                                                 coherent_information(dist, p)));
            }
        }
        for (int c = 0; c < codes; ++c) {
            const auto code = random_stabilizer_code(2 + c % 4, static_cast<uint64_t>(c) + 1);
            for (double f : {0.75, 0.80, 0.81, 0.85, 0.95}) {
                const auto dist = joint_distribution(
                    code, uniform_assignment(code.n, PauliChannel::depolarizing(f)), opts);
                worst = std::max(worst, std::abs(shor_smolin_capacity(dist, code.n).q_ss -
                                                 coherent_information(dist, code.n)));
            }
        }
        report.record("q_ss equals coherent information", worst < 1e-12,
                      "max deviation " + sci3(worst));
    }
    {
        StabilizerCode flat;
        flat.n = 4;
        flat.generators = {PauliOperator::from_string("ZZII"),
                           PauliOperator::from_string("IIZZ"),
                           PauliOperator::from_string("ZIZI")};
        flat.logical_x = PauliOperator::from_string("XXXX");
        flat.logical_z = PauliOperator::from_string("ZIII");
        const std::vector<ConcatLevel> levels{cat_level(2), cat_level(2)};
        double worst = 0.0;
        for (double f : {0.8, 0.85, 0.9}) {
            const auto direct = shor_smolin_capacity(
                joint_distribution(flat, uniform_assignment(4, PauliChannel::depolarizing(f)),
                                   opts),
                4);
            worst = std::max(worst,
                             std::abs(concatenated_qss(levels, f, opts).q_ss - direct.q_ss));
        }
        report.record("flattened concatenation oracle", worst < 1e-10,
                      "max deviation " + sci3(worst));
    }
    if (full) {
        const double t = double_cat_threshold(opts);
        report.record("double-cat threshold", std::abs(t - 0.80944) < 1e-4,
                      "f = " + fixed6(t));
    }

    std::cout << "verify: " << report.passed << "/" << (report.passed + report.failed)
              << " checks passed\n";
    return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Achievable quantum-channel capacities of additive codes via coset "
                 "weight enumerators"};
    app.require_subcommand(1);

    // qss
    auto* qss = app.add_subcommand("qss", "capacity of one code over one channel");
    std::string qss_code, qss_dump;
    std::optional<double> qss_f;
    std::optional<std::string> qss_probs;
    EnumFlags qss_flags;
    qss->add_option("--code", qss_code, "code spec: cat:<p>, rotcat:<p>, file:<path.json>")
        ->required();
    auto* qss_f_opt = qss->add_option("--f", qss_f, "depolarizing fidelity");
    qss->add_option("--probs", qss_probs, "channel probabilities pI,pX,pY,pZ")
        ->excludes(qss_f_opt);
    qss->add_option("--dump-table", qss_dump,
                    "write the joint syndrome/class table as CSV (\"-\" for stdout)");
    add_enum_flags(qss, qss_flags);

    // threshold
    auto* thr = app.add_subcommand("threshold", "largest zero of a code's capacity");
    std::string thr_code, thr_bracket = "0.75:0.999";
    EnumFlags thr_flags;
    thr->add_option("--code", thr_code, "code spec")->required();
    thr->add_option("--bracket", thr_bracket, "search bracket lo:hi")->capture_default_str();
    add_enum_flags(thr, thr_flags);

    // table
    auto* tab = app.add_subcommand("table", "cat-code threshold table");
    int tab_pmax = 14;
    tab->add_option("--pmax", tab_pmax, "largest block size")
        ->capture_default_str()
        ->check(CLI::Range(1, 30));

    // sweep
    auto* swp = app.add_subcommand("sweep", "capacity-vs-fidelity CSV");
    std::string swp_schemes, swp_grid;
    EnumFlags swp_flags;
    swp->add_option("--schemes", swp_schemes, "comma-separated code specs")->required();
    swp->add_option("--f", swp_grid, "fidelity grid lo:hi:step")->required();
    add_enum_flags(swp, swp_flags);

    // concat
    auto* con = app.add_subcommand("concat", "multi-level concatenated capacity");
    std::vector<std::string> con_levels;
    std::optional<double> con_f;
    bool con_thr = false;
    std::string con_bracket = "0.75:0.999";
    EnumFlags con_flags;
    con->add_option("--level", con_levels, "level code spec, repeatable, innermost first")
        ->required();
    auto* con_f_opt = con->add_option("--f", con_f, "depolarizing fidelity");
    con->add_flag("--find-threshold", con_thr, "bisect the capacity zero")
        ->excludes(con_f_opt);
    con->add_option("--bracket", con_bracket, "threshold bracket lo:hi")->capture_default_str();
    add_enum_flags(con, con_flags);

    // search
    auto* sea = app.add_subcommand("search", "random-code search at fixed fidelity");
    int sea_n = 5, sea_trials = 1000;
    double sea_f = 0.8097;
    uint64_t sea_seed = 1;
    EnumFlags sea_flags;
    sea->add_option("--n", sea_n, "block size (1..6)")->capture_default_str();
    sea->add_option("--trials", sea_trials, "number of sampled codes")->capture_default_str();
    sea->add_option("--f", sea_f, "depolarizing fidelity")->capture_default_str();
    sea->add_option("--seed", sea_seed, "RNG seed")->capture_default_str();
    add_enum_flags(sea, sea_flags);

    // verify
    auto* ver = app.add_subcommand("verify", "self-check suite");
    bool ver_quick = false, ver_full = false;
    EnumFlags ver_flags;
    auto* quick_flag = ver->add_flag("--quick", ver_quick, "reduced checks, finishes in seconds");
    ver->add_flag("--full", ver_full, "adds the double-cat threshold")->excludes(quick_flag);
    add_enum_flags(ver, ver_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (qss->parsed()) {
            if (!qss_f && !qss_probs) {
                throw CLI::ValidationError("qss needs --f or --probs");
            }
            return cmd_qss(qss_code, qss_f, qss_probs, qss_dump, qss_flags);
        }
        if (thr->parsed()) return cmd_threshold(thr_code, thr_bracket, thr_flags);
        if (tab->parsed()) return cmd_table(tab_pmax);
        if (swp->parsed()) return cmd_sweep(swp_schemes, swp_grid, swp_flags);
        if (con->parsed()) {
            if (!con_f && !con_thr) {
                throw CLI::ValidationError("concat needs --f or --find-threshold");
            }
            return cmd_concat(con_levels, con_f, con_thr, con_bracket, con_flags);
        }
        if (sea->parsed()) return cmd_search(sea_n, sea_trials, sea_f, sea_seed, sea_flags);
        if (ver->parsed()) return cmd_verify(ver_quick, ver_full, ver_flags);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
