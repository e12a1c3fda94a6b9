#pragma once

// Command-line driver. `run` is the whole program minus `main`, so the tests
// can drive it with in-memory streams.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "analysis.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "products.hpp"
#include "verify.hpp"

namespace redkron::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_verify_failed = 2,
    exit_resource = 3,
};

inline constexpr const char* kCacheEnv = "REDKRON_CACHE_DIR";

namespace detail {

using nlohmann::json;

struct Record {
    std::string command;
    json inputs = json::object();
    json result;
    std::string text; ///< text-mode rendering of `result`
};

inline std::string fmt_cc(const CcType& cc)
{
    return "(" + std::to_string(cc.components) + "," + std::to_string(cc.constituents) + ")";
}

inline json report_json(const verify::Report& r)
{
    return {{"suite", r.suite}, {"passed", r.passed}, {"checked", r.checked}, {"failures", r.failures}, {"notes", r.notes}};
}

inline std::string report_text(const verify::Report& r)
{
    std::string s;
    for (const auto& n : r.notes)
        s += "note: " + n + "\n";
    for (const auto& f : r.failures)
        s += "FAIL: " + f + "\n";
    s += "suite " + r.suite + ": " + (r.passed ? "PASS" : "FAIL") + " (" + std::to_string(r.checked) + " checks)";
    return s;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using detail::json;

    CLI::App app{"Exact Kronecker, outer and reduced Kronecker products of symmetric group characters", "redkron"};
    app.require_subcommand(1, 1);

    bool as_json = false;
    bool timing = false;
    std::string cache_dir;
    int max_level = 20;
    app.add_flag("--json", as_json, "Emit one JSON record instead of text");
    app.add_flag("--timing", timing, "Include wall-clock timing in the output");
    app.add_option("--cache-dir", cache_dir, "Character table cache directory (overrides $REDKRON_CACHE_DIR)");
    app.add_option("--max-level", max_level, "Ceiling on the symmetric group level of products")->check(CLI::Range(0, kMaxSupportedLevel));

    std::string a1, a2, a3, kind;
    int level_n = 0;
    bool write_cache = false;
    std::string suite;
    verify::Options vopt;
    int max_size = -1;
    int bench_max = 12;

    auto* product = app.add_subcommand("product", "Kronecker product [λ][μ] (equal sizes)");
    product->add_option("lambda", a1)->required();
    product->add_option("mu", a2)->required();

    auto* reduced = app.add_subcommand("reduced", "Reduced Kronecker product [λ]•⋆[μ]•");
    reduced->add_option("lambda", a1)->required();
    reduced->add_option("mu", a2)->required();

    auto* outer = app.add_subcommand("outer", "Outer product [λ]⊗[μ]");
    outer->add_option("lambda", a1)->required();
    outer->add_option("mu", a2)->required();

    auto* coeff = app.add_subcommand("coeff", "A single coefficient; for lr the first argument is the outer shape");
    coeff->add_option("--kind", kind)->required()->check(CLI::IsMember({"kron", "reduced", "lr"}));
    coeff->add_option("lambda", a1)->required();
    coeff->add_option("mu", a2)->required();
    coeff->add_option("nu", a3)->required();

    auto* cctype = app.add_subcommand("cctype", "cc-type of a product");
    cctype->add_option("--kind", kind)->required()->check(CLI::IsMember({"kron", "reduced", "outer"}));
    cctype->add_option("lambda", a1)->required();
    cctype->add_option("mu", a2)->required();

    auto* classify = app.add_subcommand("classify", "Classification case of a reduced product, checked by computation");
    classify->add_option("lambda", a1)->required();
    classify->add_option("mu", a2)->required();

    auto* straighten_cmd = app.add_subcommand("straighten", "Straighten an integer sequence to ±[λ] or 0");
    straighten_cmd->add_option("alpha", a1)->required();

    auto* level = app.add_subcommand("level", "Stable level |λ|+|μ|+λ₁+μ₁");
    level->add_option("lambda", a1)->required();
    level->add_option("mu", a2)->required();

    auto* atlevel = app.add_subcommand("atlevel", "Kronecker product [λ[n]][μ[n]]");
    atlevel->add_option("lambda", a1)->required();
    atlevel->add_option("mu", a2)->required();
    atlevel->add_option("--n", level_n)->required();

    auto* chartable = app.add_subcommand("chartable", "Character table of S_N");
    chartable->add_option("N", level_n)->required();
    chartable->add_flag("--write-cache", write_cache, "Write chartable_<N>.json to the cache directory");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember([] {
        std::vector<std::string> names;
        for (const auto& [name, fn] : verify::suites())
            names.push_back(name);
        return names;
    }()));
    verify_cmd->add_option("--max-size", max_size, "Largest partition size swept");
    verify_cmd->add_option("--threads", vopt.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    verify_cmd->add_option("--samples", vopt.samples, "Random witnesses per kind (monotone)");
    verify_cmd->add_option("--seed", vopt.seed, "Random seed (monotone)");

    auto* bench = app.add_subcommand("bench", "Time character table construction and a product per level");
    bench->add_option("--max-n", bench_max)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (cache_dir.empty())
        if (const char* env = std::getenv(kCacheEnv))
            cache_dir = env;
    TableStore::Limits limits;
    limits.max_product_level = max_level;
    limits.max_table_level = std::max(limits.max_table_level, max_level);
    TableStore store(limits, cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(cache_dir));

    detail::Record rec;
    int code = exit_ok;
    auto started = std::chrono::steady_clock::now();

    try {
        auto two = [&] {
            Partition l = parse_partition(a1), m = parse_partition(a2);
            rec.inputs = {{"lambda", l.vec()}, {"mu", m.vec()}};
            return std::make_pair(l, m);
        };
        auto decomposition_result = [&](const Decomposition& d) {
            rec.result = {{"decomposition", decomposition_to_json(d)}, {"cc_type", cc_type_to_json(d.cc_type())}};
            rec.text = format_decomposition(d);
        };

        if (*product) {
            rec.command = "product";
            auto [l, m] = two();
            decomposition_result(kron_product(l, m, store));
        } else if (*reduced) {
            rec.command = "reduced";
            auto [l, m] = two();
            decomposition_result(reduced_product(l, m, store));
        } else if (*outer) {
            rec.command = "outer";
            auto [l, m] = two();
            decomposition_result(outer_product(l, m));
        } else if (*coeff) {
            rec.command = "coeff";
            auto [l, m] = two();
            Partition n = parse_partition(a3);
            rec.inputs["nu"] = n.vec();
            rec.inputs["kind"] = kind;
            std::int64_t v = kind == "kron" ? kron_coeff(l, m, n, store)
                             : kind == "reduced" ? reduced_coeff(l, m, n, store)
                                                 : lr_coeff(l, m, n);
            rec.result = {{"value", v}};
            rec.text = std::to_string(v);
        } else if (*cctype) {
            rec.command = "cctype";
            auto [l, m] = two();
            rec.inputs["kind"] = kind;
            Decomposition d = kind == "kron" ? kron_product(l, m, store)
                              : kind == "reduced" ? reduced_product(l, m, store)
                                                  : outer_product(l, m);
            auto cc = d.cc_type();
            rec.result = {{"cc_type", cc_type_to_json(cc)}};
            rec.text = detail::fmt_cc(cc);
        } else if (*classify) {
            rec.command = "classify";
            auto [l, m] = two();
            auto cls = classify_product(l, m);
            auto prod = reduced_product(l, m, store);
            auto cc = prod.cc_type();
            bool verified = prod.is_multiplicity_free() == cls.multiplicity_free
                            && (cc.components < 10) == (cls.tag != CaseTag::General)
                            && (!cls.expected_cc || *cls.expected_cc == cc);
            rec.result = {{"case", to_string(cls.tag)},
                          {"expected_cc_type", cls.expected_cc ? cc_type_to_json(*cls.expected_cc) : json(nullptr)},
                          {"computed_cc_type", cc_type_to_json(cc)},
                          {"multiplicity_free", cls.multiplicity_free},
                          {"verified", verified}};
            rec.text = std::string("case: ") + to_string(cls.tag) + "\nexpected cc-type: "
                       + (cls.expected_cc ? detail::fmt_cc(*cls.expected_cc) : "-") + "\ncomputed cc-type: "
                       + detail::fmt_cc(cc) + "\nmultiplicity free: " + (cls.multiplicity_free ? "yes" : "no")
                       + "\nverified: " + (verified ? "yes" : "no");
            if (!verified)
                code = exit_verify_failed;
        } else if (*straighten_cmd) {
            rec.command = "straighten";
            Composition alpha = parse_composition(a1);
            rec.inputs = {{"alpha", alpha.vec()}};
            auto s = straighten(alpha);
            if (s.is_zero()) {
                rec.result = {{"zero", true}};
                rec.text = "0";
            } else {
                rec.result = {{"zero", false}, {"sign", s.sign()}, {"partition", s.partition().vec()}};
                rec.text = (s.sign() < 0 ? "-" : "") + format_partition(s.partition());
            }
        } else if (*level) {
            rec.command = "level";
            auto [l, m] = two();
            int n = stable_level(l, m);
            rec.result = {{"level", n}};
            rec.text = std::to_string(n);
        } else if (*atlevel) {
            rec.command = "atlevel";
            auto [l, m] = two();
            rec.inputs["n"] = level_n;
            decomposition_result(product_at_level(l, m, level_n, store));
        } else if (*chartable) {
            rec.command = "chartable";
            rec.inputs = {{"n", level_n}};
            auto t = store.table(level_n);
            if (write_cache) {
                auto path = store.write_cache(level_n);
                err << "wrote " << path.string() << "\n";
            }
            rec.result = json::parse(table_to_json(*t));
            std::string s = "n=" + std::to_string(level_n) + " classes=" + std::to_string(t->dimension());
            for (std::size_t i = 0; i < t->dimension(); ++i) {
                s += "\n" + format_partition(t->partitions()[i]) + ":";
                for (auto v : t->row(i))
                    s += " " + std::to_string(v);
            }
            rec.text = s;
        } else if (*verify_cmd) {
            rec.command = "verify";
            if (max_size >= 0)
                vopt.max_size = max_size;
            rec.inputs = {{"suite", suite}, {"threads", vopt.threads}};
            if (vopt.max_size)
                rec.inputs["max_size"] = *vopt.max_size;
            auto report = verify::suites().at(suite)(vopt, store);
            rec.result = detail::report_json(report);
            rec.text = detail::report_text(report);
            if (!report.passed)
                code = exit_verify_failed;
        } else if (*bench) {
            rec.command = "bench";
            rec.inputs = {{"max_n", bench_max}};
            if (bench_max > limits.max_table_level)
                throw ResourceLimit("bench level exceeds ceiling");
            json rows = json::array();
            std::string s;
            for (int n = 1; n <= bench_max; ++n) {
                Partition hook = n >= 2 ? Partition{n - 1, 1} : Partition{1};
                TableStore local(TableStore::Limits{n, n});
                auto t0 = std::chrono::steady_clock::now();
                auto table = local.table(n);
                auto t1 = std::chrono::steady_clock::now();
                auto prod = kron_product(hook, hook, local);
                auto t2 = std::chrono::steady_clock::now();
                double table_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                double product_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
                rows.push_back({{"n", n}, {"classes", table->dimension()}, {"table_ms", table_ms}, {"product_ms", product_ms}});
                if (!s.empty())
                    s += "\n";
                s += "n=" + std::to_string(n) + " classes=" + std::to_string(table->dimension())
                     + " table_ms=" + std::to_string(table_ms) + " product_ms=" + std::to_string(product_ms)
                     + " terms=" + std::to_string(prod.size());
            }
            rec.result = {{"levels", rows}};
            rec.text = s;
        }
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    if (as_json) {
        json j = {{"command", rec.command}, {"inputs", rec.inputs}, {"result", rec.result}};
        if (timing)
            j["timing_ms"] = elapsed;
        out << j.dump() << "\n";
    } else {
        out << rec.text << "\n";
        if (timing)
            out << "time: " << elapsed << " ms\n";
    }
    return code;
}

} // namespace redkron::cli
