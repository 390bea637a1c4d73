#pragma once

#include "classify.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "span.hpp"
#include "subgroup.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace schur {

/// The lambda table of C-bar * D-bar in text form: one `lambda <c> <d> <e>
/// <value>` line per nonzero constant in canonical class order, then a
/// `conservation <sum lambda*|E|> <|C|*|D|>` line.
inline std::string structure_report(const SchurRing& R, std::size_t ci, std::size_t dj) {
    StructureTable t = R.structure_constants(ci, dj);
    std::ostringstream out;
    Rat sum = 0;
    for (const auto& [k, v] : t.entries) {
        out << "lambda " << ci << " " << dj << " " << k << " " << rat_to_string(v) << "\n";
        sum += v * Rat(Int(R.partition().class_at(k).size()));
    }
    Rat target = Rat(Int(R.partition().class_at(ci).size())) *
                 Rat(Int(R.partition().class_at(dj).size()));
    out << "conservation " << rat_to_string(sum) << " " << rat_to_string(target) << "\n";
    return out.str();
}

namespace cli_detail {

/// Flag-level misuse: wrong values for options, guards tripped. Exit code 2,
/// as opposed to semantic rejection of well-formed input (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Partition load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return parse_partition(in);
}

inline std::pair<GroupContext, std::vector<RingElement>> load_elements(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return parse_elements(in);
}

/// Commands other than classify-rational refuse windowless `group Z` input:
/// accepting it would silently pick a truncation.
inline void require_window_if_infinite(const Partition& P) {
    if (P.ctx().kind() == GroupKind::InfiniteCyclic &&
        P.universe_kind() == UniverseKind::ClassListOnly)
        throw UsageError("window required for group Z input");
}

inline Int parse_positive_int(const std::string& s, const std::string& what) {
    auto q = parse_rational(s);
    if (!q || !is_integral(*q) || *q < 1) throw UsageError(what + " must be a positive integer");
    return rat_num(*q);
}

inline int report_verdict(const Verdict& v, std::ostream& out) {
    if (!v.ok()) {
        out << "axiom " << v.axiom << " violated: " << v.witness << "\n";
        out << "verdict " << to_string(v.status) << "\n";
        return 1;
    }
    out << "axiom identity-class ok\n";
    out << "axiom star-closure ok\n";
    out << "axiom product-splitting ok\n";
    out << "verdict " << to_string(v.status) << "\n";
    return 0;
}

inline int cmd_verify(const std::string& file, std::ostream& out) {
    Partition P = load_partition(file);
    require_window_if_infinite(P);
    out << serialize_partition(P);
    return report_verdict(verify_schur_ring(P), out);
}

inline int cmd_structure(const std::string& file, std::size_t ci, std::size_t dj,
                         std::ostream& out) {
    Partition P = load_partition(file);
    require_window_if_infinite(P);
    Verdict v = verify_schur_ring(P);
    if (!v.ok()) return report_verdict(v, out);
    if (ci >= P.size() || dj >= P.size())
        throw UsageError("class index out of range (partition has " + std::to_string(P.size()) +
                         " classes)");
    out << structure_report(SchurRing(P), ci, dj);
    return 0;
}

inline int cmd_orbit(const std::string& n_str, const std::string& mults, std::ostream& out) {
    Int n = parse_positive_int(n_str, "order");
    std::set<Int> ms;
    std::size_t start = 0;
    while (start <= mults.size()) {
        std::size_t comma = mults.find(',', start);
        std::string tok = mults.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        if (!tok.empty()) {
            auto q = parse_rational(tok);
            if (!q || !is_integral(*q)) throw UsageError("multiplier '" + tok + "' is not an integer");
            ms.insert(rat_num(*q));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (ms.empty()) throw UsageError("at least one multiplier required");
    try {
        out << serialize_partition(orbit_ring(n, ms).partition());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return 0;
}

inline int cmd_symmetric(const std::string& n_str, const std::vector<std::string>& window,
                         std::ostream& out) {
    if (n_str.empty() == window.empty())
        throw UsageError("exactly one of --n and --window is required");
    if (!n_str.empty()) {
        Int n = parse_positive_int(n_str, "order");
        out << serialize_partition(symmetric_ring(GroupContext::finite(n)).partition());
        return 0;
    }
    auto qlo = parse_rational(window[0]);
    auto qhi = parse_rational(window[1]);
    if (!qlo || !qhi || !is_integral(*qlo) || !is_integral(*qhi))
        throw UsageError("window bounds must be integers");
    if (rat_num(*qlo) != -rat_num(*qhi) || *qhi < 0)
        throw UsageError("window must be a symmetric range [-N, N]");
    out << serialize_partition(symmetric_ring(GroupContext::infinite(), rat_num(*qhi)).partition());
    return 0;
}

inline int cmd_trivial(const std::string& n_str, std::ostream& out) {
    Int n = parse_positive_int(n_str, "order");
    out << serialize_partition(trivial_ring(GroupContext::finite(n)).partition());
    return 0;
}

inline int cmd_tensor(const std::string& f1, const std::string& f2, std::ostream& out) {
    Partition P1 = load_partition(f1);
    Partition P2 = load_partition(f2);
    require_window_if_infinite(P1);
    require_window_if_infinite(P2);
    out << serialize_partition(tensor_ring(SchurRing(P1), SchurRing(P2)).partition());
    return 0;
}

inline int cmd_decompose(const std::string& file, std::ostream& out) {
    auto parsed = load_elements(file);
    out << serialize_partition(decompose_span(SpanQuery{std::move(parsed.second)}));
    return 0;
}

inline int cmd_classify_window(const std::string& file, std::ostream& out) {
    Partition P = load_partition(file);
    if (P.ctx().kind() != GroupKind::InfiniteCyclic)
        throw UsageError("classify-window requires group Z input with a window");
    require_window_if_infinite(P);
    Verdict v = validate_partition(P);
    if (!v.ok()) return report_verdict(v, out);
    ClassificationVerdict c = classify_window(P);
    switch (c.pattern) {
    case ClassificationVerdict::Pattern::GroupRing: out << "pattern group-ring\n"; return 0;
    case ClassificationVerdict::Pattern::Symmetric: out << "pattern symmetric\n"; return 0;
    case ClassificationVerdict::Pattern::Inconsistent:
        out << "inconsistent: " << c.witness << "\n";
        return 1;
    }
    return 1;
}

inline int cmd_classify_rational(const std::string& file, std::ostream& out) {
    Partition P = load_partition(file);
    if (P.ctx().is_finite())
        throw UsageError("classify-rational requires group Q or group Z input");
    std::vector<std::set<Rat>> classes;
    for (const ExpClass& C : P.classes()) {
        if (C.size() == 1 && C[0] == 0) continue; // identity class is always {0}
        classes.emplace_back(C.begin(), C.end());
    }
    ClassificationVerdict c = classify_rational(classes);
    switch (c.pattern) {
    case ClassificationVerdict::Pattern::GroupRing: out << "pattern group-ring\n"; return 0;
    case ClassificationVerdict::Pattern::Symmetric: out << "pattern symmetric\n"; return 0;
    case ClassificationVerdict::Pattern::Inconsistent:
        out << "inconsistent: " << c.witness << "\n";
        return 1;
    }
    return 1;
}

inline std::string enumeration_summary(const Int& n, const std::vector<SchurRing>& rings) {
    std::ostringstream out;
    out << "n\t" << n.str() << "\n";
    out << "count\t" << rings.size() << "\n";
    for (std::size_t i = 0; i < rings.size(); ++i) {
        out << "ring\t" << i << "\t";
        const auto& cls = rings[i].partition().classes();
        for (std::size_t k = 0; k < cls.size(); ++k) {
            if (k) out << ",";
            out << cls[k].size();
        }
        out << "\n";
    }
    return out.str();
}

inline int cmd_enumerate(const std::string& n_str, const std::string& out_dir, bool force,
                         std::ostream& out) {
    Int n = parse_positive_int(n_str, "order");
    std::vector<SchurRing> rings;
    try {
        rings = enumerate_schur_rings(n, force);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    std::string summary = enumeration_summary(n, rings);
    out << summary;
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < rings.size(); ++i) {
            char name[48];
            std::snprintf(name, sizeof(name), "ring_%03zu.partition", i);
            std::ofstream f(std::filesystem::path(out_dir) / name);
            f << serialize_partition(rings[i].partition());
        }
        std::ofstream f(std::filesystem::path(out_dir) / "summary.tsv");
        f << summary;
    }
    return 0;
}

inline int cmd_restrict(const std::string& file, const std::string& gen_str, std::ostream& out) {
    Partition P = load_partition(file);
    require_window_if_infinite(P);
    auto g = parse_rational(gen_str);
    if (!g || *g < 0) throw UsageError("generator must be a nonnegative rational");
    SchurRing R(P);
    SubgroupDescriptor H(P.ctx(), *g);
    out << serialize_partition(restrict_ring(R, H).partition());
    return 0;
}

} // namespace cli_detail

/// Entry point behind the command-line binary. Returns the process exit code:
/// 0 accept/success, 1 input rejected with a witness, 2 usage or parse error.
/// Reports go to `out`; diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Schur-ring computations over cyclic groups"};
    app.name("schur");
    app.require_subcommand(1);

    std::string file, file2, n_str, mults, out_dir, gen_str;
    std::vector<std::string> window;
    std::size_t ci = 0, dj = 0;
    bool force = false;

    CLI::App* verify = app.add_subcommand("verify", "check the Schur-ring axioms on a partition file");
    verify->add_option("file", file)->required();

    CLI::App* structure = app.add_subcommand("structure", "lambda table of one class-sum product");
    structure->add_option("file", file)->required();
    structure->add_option("--c", ci, "row class index")->required();
    structure->add_option("--d", dj, "column class index")->required();

    CLI::App* orbit = app.add_subcommand("orbit", "orbit partition of Z/n under unit multipliers");
    orbit->add_option("n", n_str)->required();
    orbit->add_option("--mult", mults, "comma-separated unit multipliers")->required();

    CLI::App* symmetric = app.add_subcommand("symmetric", "the partition pairing g with -g");
    symmetric->add_option("--n", n_str, "group order");
    symmetric->add_option("--window", window, "symmetric window bounds")->expected(2);

    CLI::App* trivial = app.add_subcommand("trivial", "identity class plus everything else");
    trivial->add_option("--n", n_str, "group order")->required();

    CLI::App* tensor = app.add_subcommand("tensor", "dot product of two rings with coprime orders");
    tensor->add_option("file1", file)->required();
    tensor->add_option("file2", file2)->required();

    CLI::App* decompose = app.add_subcommand("decompose", "primitive partition of a span of elements");
    decompose->add_option("file", file)->required();

    CLI::App* cwindow = app.add_subcommand("classify-window", "match a windowed partition against the two integer patterns");
    cwindow->add_option("file", file)->required();

    CLI::App* crational = app.add_subcommand("classify-rational", "match a rational class family against the two patterns");
    crational->add_option("file", file)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "all Schur rings over Z/n");
    enumerate->add_option("n", n_str)->required();
    enumerate->add_option("--out", out_dir, "directory for partition files and summary.tsv");
    enumerate->add_flag("--force", force, "override the order guard");

    CLI::App* restrict_cmd = app.add_subcommand("restrict", "restriction to the S-subgroup of a generator");
    restrict_cmd->add_option("file", file)->required();
    restrict_cmd->add_option("--generator", gen_str)->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return cli_detail::cmd_verify(file, out);
        if (app.got_subcommand(structure)) return cli_detail::cmd_structure(file, ci, dj, out);
        if (app.got_subcommand(orbit)) return cli_detail::cmd_orbit(n_str, mults, out);
        if (app.got_subcommand(symmetric)) return cli_detail::cmd_symmetric(n_str, window, out);
        if (app.got_subcommand(trivial)) return cli_detail::cmd_trivial(n_str, out);
        if (app.got_subcommand(tensor)) return cli_detail::cmd_tensor(file, file2, out);
        if (app.got_subcommand(decompose)) return cli_detail::cmd_decompose(file, out);
        if (app.got_subcommand(cwindow)) return cli_detail::cmd_classify_window(file, out);
        if (app.got_subcommand(crational)) return cli_detail::cmd_classify_rational(file, out);
        if (app.got_subcommand(enumerate)) return cli_detail::cmd_enumerate(n_str, out_dir, force, out);
        if (app.got_subcommand(restrict_cmd)) return cli_detail::cmd_restrict(file, gen_str, out);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const cli_detail::UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no command selected\n";
    return 2;
}

} // namespace schur
