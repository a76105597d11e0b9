#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyded/dedekind.hpp"
#include "polyded/verify.hpp"

namespace polyded::cli {

// Anything wrong with the request itself (flags, ranges, literals); maps to
// exit status 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Rational parse_rational(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

inline long long parse_int(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw UsageError(what + ": expected an integer, got '" + text + "'");
    }
    if (pos != text.size()) throw UsageError(what + ": expected an integer, got '" + text + "'");
    return value;
}

// "a" or "a..b", both ends inclusive.
struct RangeSpec {
    long long lo = 0;
    long long hi = 0;
    bool ranged = false;
};

inline RangeSpec parse_range(const std::string& text, const std::string& what) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const long long v = parse_int(text, what);
        return {v, v, false};
    }
    const long long lo = parse_int(text.substr(0, pos), what);
    const long long hi = parse_int(text.substr(pos + 2), what);
    if (lo > hi) throw UsageError(what + ": empty range '" + text + "'");
    return {lo, hi, true};
}

enum class OutputFormat { plain, json, csv };

inline OutputFormat parse_format(const std::string& text) {
    if (text == "plain") return OutputFormat::plain;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw UsageError("--format must be one of plain, json, csv");
}

namespace detail {

enum class ColumnType { integer, text, boolean };

struct Column {
    std::string name;
    ColumnType type;
};

// Streams json/csv rows immediately; buffers plain rows so columns can be
// aligned. Empty cells mean "not applicable" and are dropped from JSON.
class TableWriter {
public:
    TableWriter(OutputFormat format, std::vector<Column> columns, std::ostream& out)
        : format_(format), columns_(std::move(columns)), out_(out) {
        if (format_ == OutputFormat::csv) {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                out_ << (i ? "," : "") << columns_[i].name;
            out_ << '\n';
        }
    }

    void row(std::vector<std::string> values) {
        switch (format_) {
            case OutputFormat::csv: {
                for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << values[i];
                out_ << '\n';
                break;
            }
            case OutputFormat::json: {
                nlohmann::ordered_json j;
                for (std::size_t i = 0; i < values.size(); ++i) {
                    if (values[i].empty()) continue;
                    switch (columns_[i].type) {
                        case ColumnType::integer: j[columns_[i].name] = parse_int(values[i], "internal"); break;
                        case ColumnType::boolean: j[columns_[i].name] = values[i] == "true"; break;
                        case ColumnType::text: j[columns_[i].name] = values[i]; break;
                    }
                }
                out_ << j.dump() << '\n';
                break;
            }
            case OutputFormat::plain: rows_.push_back(std::move(values)); break;
        }
    }

    void finish() {
        if (format_ != OutputFormat::plain) return;
        std::vector<std::size_t> widths(columns_.size());
        for (std::size_t i = 0; i < columns_.size(); ++i) widths[i] = columns_[i].name.size();
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
        const auto emit = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out_ << "  ";
                out_ << cells[i];
                if (i + 1 < cells.size()) out_ << std::string(widths[i] - cells[i].size(), ' ');
            }
            out_ << '\n';
        };
        std::vector<std::string> header;
        header.reserve(columns_.size());
        for (const auto& c : columns_) header.push_back(c.name);
        emit(header);
        for (const auto& r : rows_) emit(r);
    }

private:
    OutputFormat format_;
    std::vector<Column> columns_;
    std::ostream& out_;
    std::vector<std::vector<std::string>> rows_;
};

inline constexpr std::array<const char*, 8> kParamOrder{"h", "m", "p", "k", "n", "s", "d", "i"};

class VerifyWriter {
public:
    VerifyWriter(OutputFormat format, std::ostream& out) : format_(format), out_(out) {
        if (format_ == OutputFormat::csv) out_ << "identity,h,m,p,k,n,s,d,i,lhs,rhs,holds\n";
    }

    void line(const verify::Line& l) {
        switch (format_) {
            case OutputFormat::json: {
                nlohmann::ordered_json j;
                j["identity"] = l.identity;
                nlohmann::ordered_json params = nlohmann::ordered_json::object();
                for (const auto& [name, value] : l.params) params[name] = value;
                j["params"] = std::move(params);
                if (!l.skipped.empty()) {
                    j["skipped"] = l.skipped;
                } else {
                    j["lhs"] = l.lhs;
                    j["rhs"] = l.rhs;
                    j["holds"] = l.holds;
                }
                out_ << j.dump() << '\n';
                break;
            }
            case OutputFormat::csv: {
                out_ << l.identity;
                for (const char* name : kParamOrder) out_ << ',' << param_text(l, name);
                out_ << ',' << l.lhs << ',' << l.rhs << ','
                     << (l.skipped.empty() ? (l.holds ? "true" : "false") : "skipped") << '\n';
                break;
            }
            case OutputFormat::plain: {
                std::vector<std::string> cells;
                cells.reserve(12);
                cells.push_back(l.identity);
                for (const char* name : kParamOrder) cells.push_back(param_text(l, name));
                cells.push_back(l.lhs);
                cells.push_back(l.rhs);
                cells.push_back(l.skipped.empty() ? (l.holds ? "ok" : "FAIL") : "skip(" + l.skipped + ")");
                rows_.push_back(std::move(cells));
                break;
            }
        }
    }

    void finish() {
        if (format_ != OutputFormat::plain) return;
        static const std::array<const char*, 12> header{"identity", "h", "m", "p",   "k",   "n",
                                                        "s",        "d", "i", "lhs", "rhs", "status"};
        std::vector<std::size_t> widths(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) widths[i] = std::string(header[i]).size();
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
        const auto emit = [&](auto&& cells) {
            for (std::size_t i = 0; i < widths.size(); ++i) {
                if (i) out_ << "  ";
                const std::string cell(cells[i]);
                out_ << cell;
                if (i + 1 < widths.size()) out_ << std::string(widths[i] - cell.size(), ' ');
            }
            out_ << '\n';
        };
        emit(header);
        for (const auto& r : rows_) emit(r);
    }

private:
    static std::string param_text(const verify::Line& l, const char* name) {
        for (const auto& [pname, value] : l.params)
            if (pname == name) return std::to_string(value);
        return {};
    }

    OutputFormat format_;
    std::ostream& out_;
    std::vector<std::vector<std::string>> rows_;
};

inline const std::map<std::string, std::vector<std::string>>& identity_flag_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"lemma1", {"n", "d"}},
        {"theorem2", {"k", "n"}},
        {"theorem3", {"p", "k", "s"}},
        {"corollary4", {"p", "k", "s"}},
        {"theorem5", {"p", "k"}},
        {"proposition6", {"m", "p", "k"}},
        {"theorem7", {"m", "p", "k"}},
        {"theorem8", {"h", "m", "p", "k"}},
        {"theorem9", {"k", "n", "d"}},
        {"theorem10", {"h", "m", "p", "k"}},
        {"corollary11", {"h", "m", "p"}},
        {"classical-reciprocity", {"h", "m"}},
        {"apostol-reciprocity", {"h", "m", "p"}},
    };
    return table;
}

// Reads the process environment: POLYDED_MAX_K caps |k|, and the test hook
// POLYDED_TEST_CORRUPT_STIRLING ("n,m,delta") perturbs one Stirling entry.
// Unset variables reset both knobs so every run starts from the same state.
inline void apply_environment() {
    if (const char* cap = std::getenv("POLYDED_MAX_K")) {
        const long long v = parse_int(cap, "POLYDED_MAX_K");
        if (v < 0) throw UsageError("POLYDED_MAX_K must be nonnegative");
        poly_bernoulli_index_cap() = static_cast<int>(v);
    } else {
        poly_bernoulli_index_cap() = 16;
    }
    if (const char* hook = std::getenv("POLYDED_TEST_CORRUPT_STIRLING")) {
        const std::string text(hook);
        const auto first = text.find(',');
        const auto second = text.find(',', first == std::string::npos ? first : first + 1);
        if (first == std::string::npos || second == std::string::npos)
            throw UsageError("POLYDED_TEST_CORRUPT_STIRLING must be 'n,m,delta'");
        testing::StirlingCorruption corruption;
        corruption.n = static_cast<int>(parse_int(text.substr(0, first), "POLYDED_TEST_CORRUPT_STIRLING"));
        corruption.m = static_cast<int>(
            parse_int(text.substr(first + 1, second - first - 1), "POLYDED_TEST_CORRUPT_STIRLING"));
        corruption.delta = parse_int(text.substr(second + 1), "POLYDED_TEST_CORRUPT_STIRLING");
        testing::stirling_corruption() = corruption;
    } else {
        testing::stirling_corruption().reset();
    }
}

inline std::vector<long long> expand(const RangeSpec& r) {
    std::vector<long long> values;
    values.reserve(static_cast<std::size_t>(r.hi - r.lo + 1));
    for (long long v = r.lo; v <= r.hi; ++v) values.push_back(v);
    return values;
}

inline int handle_bernoulli(long long max_n, OutputFormat format, std::ostream& out) {
    if (max_n < 0) throw UsageError("bernoulli: --max-n must be nonnegative");
    const BernoulliCache cache(static_cast<int>(max_n));
    TableWriter writer(format, {{"n", ColumnType::integer}, {"value", ColumnType::text}}, out);
    for (int n = 0; n <= cache.max_n(); ++n) writer.row({std::to_string(n), cache.number(n).str()});
    writer.finish();
    return 0;
}

inline int handle_polybernoulli(long long k, long long max_n, const std::optional<std::string>& at,
                                OutputFormat format, std::ostream& out) {
    if (max_n < 0) throw UsageError("polybernoulli: --max-n must be nonnegative");
    std::optional<Rational> point;
    if (at) point = parse_rational(*at);
    const PolyBernoulliCache cache(static_cast<int>(k), static_cast<int>(max_n));
    TableWriter writer(format,
                       {{"k", ColumnType::integer},
                        {"n", ColumnType::integer},
                        {"at", ColumnType::text},
                        {"value", ColumnType::text}},
                       out);
    for (int n = 0; n <= cache.max_n(); ++n) {
        const Rational value = point ? cache.value_at(n, *point) : cache.number(n);
        writer.row({std::to_string(k), std::to_string(n), point ? point->str() : "", value.str()});
    }
    writer.finish();
    return 0;
}

inline int handle_stirling1(long long max_n, OutputFormat format, std::ostream& out) {
    if (max_n < 0) throw UsageError("stirling1: --max-n must be nonnegative");
    const Stirling1Table table(static_cast<int>(max_n));
    TableWriter writer(
        format, {{"n", ColumnType::integer}, {"m", ColumnType::integer}, {"value", ColumnType::text}}, out);
    for (int n = 0; n <= table.max_n(); ++n)
        for (int m = 0; m <= n; ++m)
            writer.row({std::to_string(n), std::to_string(m), table.at(n, m).get_str()});
    writer.finish();
    return 0;
}

inline int handle_sum(const std::string& kind_name, const std::string& h_text, const std::string& m_text,
                      const std::optional<std::string>& p_text, const std::optional<std::string>& k_text,
                      OutputFormat format, std::ostream& out) {
    SumKind kind;
    if (kind_name == "classical") kind = SumKind::classical;
    else if (kind_name == "apostol") kind = SumKind::apostol;
    else if (kind_name == "poly") kind = SumKind::poly;
    else throw UsageError("sum: --kind must be one of classical, apostol, poly");

    const RangeSpec h = parse_range(h_text, "--h");
    const RangeSpec m = parse_range(m_text, "--m");
    if (h.lo < 1) throw UsageError("sum: --h must be positive");
    if (m.lo < 1) throw UsageError("sum: --m must be positive");

    if (kind == SumKind::classical && (p_text || k_text))
        throw UsageError("sum: classical sums take no --p or --k");
    if (kind != SumKind::classical && !p_text)
        throw UsageError("sum: --p is required for kind '" + kind_name + "'");
    if (kind == SumKind::apostol && k_text) throw UsageError("sum: apostol sums take no --k");
    if (kind == SumKind::poly && !k_text) throw UsageError("sum: --k is required for kind 'poly'");

    RangeSpec p{1, 1, false}, k{1, 1, false};
    if (p_text) {
        p = parse_range(*p_text, "--p");
        if (p.lo < 1) throw UsageError("sum: --p must be positive");
    }
    if (k_text) k = parse_range(*k_text, "--k");

    const auto table = sum_table(kind, expand(h), expand(m), p_text ? expand(p) : std::vector<long long>{},
                                 k_text ? expand(k) : std::vector<long long>{});

    const bool single = !h.ranged && !m.ranged && !p.ranged && !k.ranged;
    if (single && format == OutputFormat::plain && table.size() == 1) {
        out << table.front().value.str() << '\n';
        return 0;
    }

    TableWriter writer(format,
                       {{"kind", ColumnType::text},
                        {"h", ColumnType::integer},
                        {"m", ColumnType::integer},
                        {"p", ColumnType::integer},
                        {"k", ColumnType::integer},
                        {"value", ColumnType::text}},
                       out);
    for (const auto& entry : table)
        writer.row({kind_name, std::to_string(entry.params.h), std::to_string(entry.params.m),
                    entry.params.p ? std::to_string(*entry.params.p) : "",
                    entry.params.k ? std::to_string(*entry.params.k) : "", entry.value.str()});
    writer.finish();
    return 0;
}

struct VerifyFlags {
    std::optional<std::string> h, m, p, k, n, s, d;
};

inline int handle_verify(const std::string& identity, const VerifyFlags& flags, bool fail_fast,
                         OutputFormat format, std::ostream& out) {
    if (identity != "all" && identity_flag_table().find(identity) == identity_flag_table().end())
        throw UsageError("verify: unknown identity '" + identity + "'");

    const auto applies = [&](const char* flag) {
        if (identity == "all") return true;
        const auto& allowed = identity_flag_table().at(identity);
        return std::find(allowed.begin(), allowed.end(), flag) != allowed.end();
    };
    verify::SweepOptions options;
    options.fail_fast = fail_fast;
    const std::array<std::pair<const char*, const std::optional<std::string>*>, 7> bindings{{
        {"h", &flags.h},
        {"m", &flags.m},
        {"p", &flags.p},
        {"k", &flags.k},
        {"n", &flags.n},
        {"s", &flags.s},
        {"d", &flags.d},
    }};
    const std::array<std::optional<verify::Range> verify::SweepOptions::*, 7> slots{
        &verify::SweepOptions::h, &verify::SweepOptions::m, &verify::SweepOptions::p,
        &verify::SweepOptions::k, &verify::SweepOptions::n, &verify::SweepOptions::s,
        &verify::SweepOptions::d};
    for (std::size_t i = 0; i < bindings.size(); ++i) {
        const auto& [name, text] = bindings[i];
        if (!*text) continue;
        if (!applies(name))
            throw UsageError(std::string("verify: --") + name + " does not apply to identity '" + identity + "'");
        const RangeSpec r = parse_range(**text, std::string("--") + name);
        options.*slots[i] = verify::Range{r.lo, r.hi};
    }

    VerifyWriter writer(format, out);
    const bool all_hold = verify::run_identity(identity, options, [&](const verify::Line& l) { writer.line(l); });
    writer.finish();
    return all_hold ? 0 : 1;
}

}  // namespace detail

// Full CLI entry point; returns the process exit status. 0 = success / all
// identities hold, 1 = at least one identity violated, 2 = usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        detail::apply_environment();

        CLI::App app{"Exact poly-Dedekind sums, type 2 poly-Bernoulli polynomials, and identity verification"};
        app.require_subcommand(1);
        // --h is a domain flag, so only the long help spelling is available.
        app.set_help_flag("--help", "Print help");

        const auto add_subcommand = [&](const std::string& name, const std::string& description) {
            CLI::App* sub = app.add_subcommand(name, description);
            sub->set_help_flag("--help", "Print help");
            return sub;
        };
        const auto add_format = [](CLI::App* sub, std::string& slot) {
            sub->add_option("--format", slot, "Output format: plain, json, csv")
                ->default_str("plain");
        };

        auto* bernoulli = add_subcommand("bernoulli", "Bernoulli numbers B_0..B_N");
        std::string bern_max;
        std::string bern_format = "plain";
        bernoulli->add_option("--max-n", bern_max, "Largest index N")->required();
        add_format(bernoulli, bern_format);

        auto* polybern = add_subcommand("polybernoulli", "Type 2 poly-Bernoulli numbers or values of index k");
        std::string pb_k, pb_max;
        std::optional<std::string> pb_at;
        std::string pb_format = "plain";
        polybern->add_option("--k", pb_k, "Index k")->required();
        polybern->add_option("--max-n", pb_max, "Largest degree N")->required();
        polybern->add_option("--at", pb_at, "Evaluate the polynomials at this rational (num/den)");
        add_format(polybern, pb_format);

        auto* stirling = add_subcommand("stirling1", "Signed Stirling numbers of the first kind");
        std::string st_max;
        std::string st_format = "plain";
        stirling->add_option("--max-n", st_max, "Largest row N")->required();
        add_format(stirling, st_format);

        auto* sum = add_subcommand("sum", "Dedekind, Apostol, or poly-Dedekind sums");
        std::string sum_kind, sum_h, sum_m;
        std::optional<std::string> sum_p, sum_k;
        std::string sum_format = "plain";
        sum->add_option("--kind", sum_kind, "classical, apostol, or poly")->required();
        sum->add_option("--h", sum_h, "h value or range a..b")->required();
        sum->add_option("--m", sum_m, "m value or range a..b")->required();
        sum->add_option("--p", sum_p, "p value or range (apostol, poly)");
        sum->add_option("--k", sum_k, "k value or range (poly)");
        add_format(sum, sum_format);

        auto* verify_cmd = add_subcommand("verify", "Verify identities with exact rational arithmetic");
        std::string verify_identity;
        detail::VerifyFlags verify_flags;
        bool fail_fast = false;
        std::string verify_format = "plain";
        verify_cmd->add_option("--identity", verify_identity, "Identity name or 'all'")->required();
        verify_cmd->add_option("--h", verify_flags.h, "h range");
        verify_cmd->add_option("--m", verify_flags.m, "m range");
        verify_cmd->add_option("--p", verify_flags.p, "p range");
        verify_cmd->add_option("--k", verify_flags.k, "k range");
        verify_cmd->add_option("--n", verify_flags.n, "n range");
        verify_cmd->add_option("--s", verify_flags.s, "s range");
        verify_cmd->add_option("--d", verify_flags.d, "d range");
        verify_cmd->add_flag("--fail-fast", fail_fast, "Stop at the first violated identity");
        add_format(verify_cmd, verify_format);

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }

        if (bernoulli->parsed())
            return detail::handle_bernoulli(parse_int(bern_max, "--max-n"), parse_format(bern_format), out);
        if (polybern->parsed())
            return detail::handle_polybernoulli(parse_int(pb_k, "--k"), parse_int(pb_max, "--max-n"), pb_at,
                                                parse_format(pb_format), out);
        if (stirling->parsed())
            return detail::handle_stirling1(parse_int(st_max, "--max-n"), parse_format(st_format), out);
        if (sum->parsed())
            return detail::handle_sum(sum_kind, sum_h, sum_m, sum_p, sum_k, parse_format(sum_format), out);
        if (verify_cmd->parsed())
            return detail::handle_verify(verify_identity, verify_flags, fail_fast, parse_format(verify_format),
                                         out);
        throw UsageError("no command given");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("polyded");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace polyded::cli
