#include "schreier/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schreier/closed_form.hpp"
#include "schreier/enumerate.hpp"
#include "schreier/errors.hpp"
#include "schreier/pascal.hpp"
#include "schreier/report_io.hpp"
#include "schreier/sequences.hpp"

namespace schreier::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json, bfile };

struct Globals {
    std::string format = "text";
    std::uint64_t budget = EnumerationBudget{}.max_nodes;
    std::string out_path;

    Format parsed_format() const {
        if (format == "text") return Format::text;
        if (format == "csv") return Format::csv;
        if (format == "json") return Format::json;
        if (format == "bfile") return Format::bfile;
        throw UsageError("unknown format '" + format + "'");
    }
};

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <typename T>
T need(const std::optional<T>& value, const char* flag) {
    if (!value) throw UsageError(std::string("missing required option ") + flag);
    return *value;
}

// ---- seq -------------------------------------------------------------------

struct SeqArgs {
    std::string kind;
    std::optional<std::int64_t> s, u;
    std::int64_t from = 0, to = 0;
};

SequenceSpec sequence_spec(const SeqArgs& a) {
    if (a.kind == "fib") return {SequenceKind::classic_fib, 0};
    if (a.kind == "sfib") return {SequenceKind::s_step_fib, need(a.s, "--s")};
    if (a.kind == "ksen" || a.kind == "kseq") return {SequenceKind::k_seq, need(a.u, "--u")};
    if (a.kind == "tau") return {SequenceKind::tau, need(a.s, "--s")};
    throw UsageError("unknown sequence kind '" + a.kind + "' (expected fib, sfib, ksen, tau)");
}

int cmd_seq(const SeqArgs& a, Format fmt, std::ostream& out) {
    const SequenceSpec spec = sequence_spec(a);
    const auto terms = sequence_range(spec, a.from, a.to);
    switch (fmt) {
        case Format::text:
            for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " " : "") << terms[i].second;
            out << '\n';
            break;
        case Format::bfile:
            for (const auto& [idx, value] : terms) out << idx << ' ' << value << '\n';
            break;
        case Format::csv:
            out << "index,value\n";
            for (const auto& [idx, value] : terms) out << idx << ',' << value << '\n';
            break;
        case Format::json: {
            Json arr = Json::array();
            for (const auto& [idx, value] : terms) {
                Json rec;
                rec["kind"] = a.kind;
                if (spec.kind == SequenceKind::k_seq) rec["u"] = spec.param;
                if (spec.kind == SequenceKind::s_step_fib || spec.kind == SequenceKind::tau) rec["s"] = spec.param;
                rec["index"] = idx;
                rec["value"] = value.to_string();
                arr.push_back(std::move(rec));
            }
            out << arr.dump(2) << '\n';
            break;
        }
    }
    return kSuccess;
}

// ---- triangle --------------------------------------------------------------

int cmd_triangle(std::int64_t s, std::int64_t rows, Format fmt, std::ostream& out) {
    if (fmt == Format::bfile) throw UsageError("bfile output is only available for seq");
    const STriangle tri = s_pascal_rows(s, rows);
    switch (fmt) {
        case Format::text:
            for (const auto& row : tri.rows) {
                for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
                out << '\n';
            }
            break;
        case Format::csv:
            out << "row,k,value\n";
            for (std::size_t n = 0; n < tri.rows.size(); ++n) {
                for (std::size_t k = 0; k < tri.rows[n].size(); ++k) out << n << ',' << k << ',' << tri.rows[n][k] << '\n';
            }
            break;
        case Format::json: {
            Json arr = Json::array();
            for (std::size_t n = 0; n < tri.rows.size(); ++n) {
                for (std::size_t k = 0; k < tri.rows[n].size(); ++k) {
                    arr.push_back(Json{{"s", s}, {"row", n}, {"k", k}, {"value", tri.rows[n][k].to_string()}});
                }
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::bfile: break;
    }
    return kSuccess;
}

// ---- families --------------------------------------------------------------

struct FamilyArgs {
    std::string family;
    std::optional<std::int64_t> s, u, p, n;
    std::string caps = "minimal";
};

bool is_compositions(const FamilyArgs& a) { return a.family == "K"; }

CapSequence parse_caps(const std::string& text) {
    if (text == "minimal") return {CapSequence::Kind::minimal, {}};
    if (text == "uniform") return {CapSequence::Kind::uniform, {}};
    CapSequence caps{CapSequence::Kind::explicit_list, {}};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            caps.caps.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad --caps value '" + text + "' (expected minimal, uniform or a comma list)");
        }
    }
    return caps;
}

FamilySpec family_spec(const FamilyArgs& a) {
    const std::int64_t n = need(a.n, "--n");
    if (a.family == "A") return FamilySpec::a_s(need(a.s, "--s"), n);
    if (a.family == "B") return FamilySpec::b_su(need(a.u, "--u"), n, parse_caps(a.caps));
    if (a.family == "C") return FamilySpec::c_s(need(a.s, "--s"), n);
    if (a.family == "D") return FamilySpec::d(n);
    if (a.family == "S") return FamilySpec::s_p(need(a.p, "--p"), n);
    if (a.family == "Ap") return FamilySpec::a_p(need(a.p, "--p"), n);
    if (a.family == "Bp") return FamilySpec::b_p(need(a.p, "--p"), n);
    throw UsageError("unknown family '" + a.family + "' (expected A, B, C, D, S, Ap, Bp, K)");
}

BigCount closed_count(const FamilyArgs& a, const ClosedFormTable& table) {
    if (is_compositions(a)) return table.count_K_np(need(a.n, "--n"), need(a.p, "--p"));
    const FamilySpec spec = family_spec(a);
    spec.validate();
    switch (spec.tag) {
        case FamilyTag::A_s: return table.count_A(spec.s, spec.n);
        case FamilyTag::B_su: return table.count_B(spec.u, spec.n);
        case FamilyTag::C_s: return table.count_C(spec.s, spec.n);
        case FamilyTag::D: return table.count_Bp(1, spec.n);
        case FamilyTag::S_p: return table.count_S(spec.p, spec.n);
        case FamilyTag::A_p: return table.count_Ap(spec.p, spec.n);
        case FamilyTag::B_p: return table.count_Bp(spec.p, spec.n);
    }
    return BigCount(0);
}

Json family_params(const FamilyArgs& a) {
    Json j;
    j["family"] = a.family;
    if (a.s) j["s"] = *a.s;
    if (a.u) j["u"] = *a.u;
    if (a.p) j["p"] = *a.p;
    if (a.n) j["n"] = *a.n;
    if (a.family == "B") j["caps"] = a.caps;
    return j;
}

struct Listing {
    BigCount count;
    std::vector<std::string> members;
};

Listing enumerate(const FamilyArgs& a, std::uint64_t budget, bool list) {
    EnumOptions opts;
    opts.budget.max_nodes = budget;
    opts.list_members = list;
    Listing out;
    if (is_compositions(a)) {
        auto res = enum_compositions(need(a.n, "--n"), need(a.p, "--p"), opts);
        out.count = res.count;
        for (const auto& c : res.members) out.members.push_back(c.to_string());
        return out;
    }
    auto res = enum_family(family_spec(a), opts);
    out.count = res.count;
    for (const auto& m : res.members) out.members.push_back(m.to_string());
    return out;
}

int cmd_count(const FamilyArgs& a, const std::string& method, const Globals& g, Format fmt, std::ostream& out,
              const ClosedFormTable& table) {
    if (fmt == Format::bfile) throw UsageError("bfile output is only available for seq");
    if (method != "closed" && method != "enum" && method != "both") {
        throw UsageError("unknown method '" + method + "' (expected closed, enum, both)");
    }
    std::vector<std::pair<std::string, BigCount>> results;
    if (method != "enum") results.emplace_back("closed", closed_count(a, table));
    if (method != "closed") results.emplace_back("enum", enumerate(a, g.budget, false).count);

    switch (fmt) {
        case Format::text:
            if (results.size() == 1) {
                out << results.front().second << '\n';
            } else {
                for (const auto& [m, v] : results) out << m << ' ' << v << '\n';
            }
            break;
        case Format::csv:
            out << "family,method,value\n";
            for (const auto& [m, v] : results) out << a.family << ',' << m << ',' << v << '\n';
            break;
        case Format::json: {
            Json arr = Json::array();
            for (const auto& [m, v] : results) {
                Json rec = family_params(a);
                rec["method"] = m;
                rec["value"] = v.to_string();
                arr.push_back(std::move(rec));
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::bfile: break;
    }
    if (results.size() == 2 && results[0].second != results[1].second) return kMismatch;
    return kSuccess;
}

int cmd_enum(const FamilyArgs& a, bool list, const Globals& g, Format fmt, std::ostream& out) {
    if (fmt == Format::bfile) throw UsageError("bfile output is only available for seq");
    const Listing res = enumerate(a, g.budget, list);
    switch (fmt) {
        case Format::text:
            for (const auto& m : res.members) out << m << '\n';
            out << "count " << res.count << '\n';
            break;
        case Format::csv:
            if (list) {
                out << "member\n";
                for (const auto& m : res.members) out << csv_quote(m) << '\n';
            } else {
                out << "count\n" << res.count << '\n';
            }
            break;
        case Format::json: {
            Json j = family_params(a);
            j["count"] = res.count.to_string();
            if (list) j["members"] = res.members;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::bfile: break;
    }
    return kSuccess;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string theorem;
    bool all = false;
    std::map<std::string, std::string> ranges;
    unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, Format fmt, std::ostream& out, const ClosedFormTable& table) {
    if (fmt == Format::bfile) throw UsageError("bfile output is only available for seq");
    if (a.all == !a.theorem.empty()) throw UsageError("pass exactly one of --theorem or --all");
    Grid overrides;
    for (const auto& [axis, text] : a.ranges) {
        if (!text.empty()) overrides.axes[axis] = IntRange::parse(text);
    }
    VerifyOptions opts;
    opts.budget.max_nodes = g.budget;
    opts.threads = a.threads;

    std::vector<VerificationReport> reports;
    if (a.all) {
        reports = verify_all(opts, overrides, table);
    } else {
        const auto id = parse_theorem(a.theorem);
        if (!id) throw UsageError("unknown theorem '" + a.theorem + "'");
        reports.push_back(verify(*id, overrides, opts, table));
    }
    switch (fmt) {
        case Format::text: write_reports_text(out, reports); break;
        case Format::csv: write_reports_csv(out, reports); break;
        case Format::json: write_reports_json(out, reports); break;
        case Format::bfile: break;
    }
    for (const auto& r : reports) {
        if (!r.passed()) return kMismatch;
    }
    return kSuccess;
}

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
    cmd->add_option("--family", a.family, "A, B, C, D, S, Ap, Bp or K (compositions)")->required();
    cmd->add_option("--s", a.s, "s for A and C");
    cmd->add_option("--u", a.u, "u for B");
    cmd->add_option("--p", a.p, "exponent for S, Ap, Bp and K");
    cmd->add_option("--n", a.n, "largest value (or the total, for K)")->required();
    cmd->add_option("--caps", a.caps, "B multiplicities: minimal, uniform, or a comma list c_1,...,c_n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const ClosedFormTable& table) {
    CLI::App app{"Exact counts, enumerations and identity checks for Schreier-type families"};
    app.name("schreier");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "text, csv, json or bfile")->capture_default_str();
    app.add_option("--budget", g.budget, "search-node budget for enumerations")->capture_default_str();
    app.add_option("--out", g.out_path, "write output to this file instead of standard output");

    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "emit a run of sequence terms");
    seq_cmd->add_option("--kind", seq.kind, "fib, sfib, ksen or tau")->required();
    seq_cmd->add_option("--s", seq.s, "step count for sfib and tau");
    seq_cmd->add_option("--u", seq.u, "lag for ksen");
    seq_cmd->add_option("--from", seq.from, "first index")->required();
    seq_cmd->add_option("--to", seq.to, "last index")->required();

    std::int64_t tri_s = 1, tri_rows = 0;
    auto* tri_cmd = app.add_subcommand("triangle", "print rows of the s-Pascal triangle");
    tri_cmd->add_option("--s", tri_s, "box capacity")->required();
    tri_cmd->add_option("--rows", tri_rows, "last row to print")->required();

    FamilyArgs count_args;
    std::string method = "closed";
    auto* count_cmd = app.add_subcommand("count", "count a family by closed form and/or enumeration");
    add_family_options(count_cmd, count_args);
    count_cmd->add_option("--method", method, "closed, enum or both")->capture_default_str();

    FamilyArgs enum_args;
    bool list = false;
    auto* enum_cmd = app.add_subcommand("enum", "enumerate family members");
    add_family_options(enum_cmd, enum_args);
    enum_cmd->add_flag("--list", list, "print every member");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "check identities over parameter grids");
    ver_cmd->add_option("--theorem", ver.theorem, "T1, T2, T3, T4_S, T4_A, T_AB, COR1, DIAG_SUM, TAU_REC, "
                                                  "MULT_INVARIANCE, D_FIB, HOCKEY, STARS_BARS");
    ver_cmd->add_flag("--all", ver.all, "run every identity on its default grid");
    for (const char* axis : {"s", "u", "p", "n", "r", "b"}) {
        ver_cmd->add_option(std::string("--") + axis, ver.ranges[axis], "override the axis range, a..b");
    }
    ver_cmd->add_option("--threads", ver.threads, "worker threads (0 = hardware concurrency)");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("schreier");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!g.out_path.empty()) {
        file.open(g.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << g.out_path << " for writing\n";
            return kUsage;
        }
        sink = &file;
    }

    try {
        const Format fmt = g.parsed_format();
        if (g.budget == 0) throw UsageError("--budget must be positive");
        if (*seq_cmd) return cmd_seq(seq, fmt, *sink);
        if (*tri_cmd) return cmd_triangle(tri_s, tri_rows, fmt, *sink);
        if (*count_cmd) return cmd_count(count_args, method, g, fmt, *sink, table);
        if (*enum_cmd) return cmd_enum(enum_args, list, g, fmt, *sink);
        if (*ver_cmd) return cmd_verify(ver, g, fmt, *sink, table);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const ListingCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    }
    return kUsage;
}

}  // namespace schreier::cli
