// Command-line front end. Talks to the library only through the C API.
#include "hnf/hnf.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

// Thrown for anything the user should fix; carries the exit code.
struct Failure {
    int code;
    std::string message;
};

struct JordanDeleter {
    void operator()(hnf_jordan* p) const { hnf_jordan_free(p); }
};
struct FormDeleter {
    void operator()(hnf_form* p) const { hnf_form_free(p); }
};
struct ReportsDeleter {
    void operator()(hnf_reports* p) const { hnf_reports_free(p); }
};
using Jordan = std::unique_ptr<hnf_jordan, JordanDeleter>;
using Form = std::unique_ptr<hnf_form, FormDeleter>;
using Reports = std::unique_ptr<hnf_reports, ReportsDeleter>;

int exit_for(hnf_status s) {
    switch (s) {
    case HNF_MISMATCH:
    case HNF_INTERNAL: return kMismatch;
    default: return kUsage;
    }
}

// Error message with a caret under the offending byte when there is one.
void check(hnf_status s, const std::string& input = {}) {
    if (s == HNF_OK) return;
    std::string msg = std::string(hnf_status_name(s)) + ": " + hnf_last_error();
    const std::int64_t pos = hnf_last_error_position();
    if (s == HNF_PARSE_ERROR && pos >= 0 && !input.empty()) {
        msg += "\n  " + input + "\n  " + std::string(static_cast<std::size_t>(pos), ' ') + "^";
    }
    throw Failure{exit_for(s), msg};
}

std::string take(char* s) {
    std::string out(s ? s : "");
    hnf_string_free(s);
    return out;
}

Jordan parse_jordan(const std::string& text) {
    hnf_jordan* j = nullptr;
    check(hnf_jordan_parse(text.c_str(), &j), text);
    return Jordan(j);
}

Form parse_form(const std::string& text) {
    hnf_form* f = nullptr;
    check(hnf_form_parse_symplectic(text.c_str(), &f), text);
    return Form(f);
}

std::string text(const hnf_jordan* j) {
    char* s = nullptr;
    check(hnf_jordan_format(j, &s));
    return take(s);
}

std::string text(const hnf_form* f) {
    char* s = nullptr;
    check(hnf_form_format(f, &s));
    return take(s);
}

json as_json(const hnf_jordan* j) {
    char* s = nullptr;
    check(hnf_jordan_to_json(j, &s));
    return json::parse(take(s));
}

json as_json(const hnf_form* f) {
    char* s = nullptr;
    check(hnf_form_to_json(f, &s));
    return json::parse(take(s));
}

// "lo..hi" or a single number.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& r) {
    try {
        const auto dots = r.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const auto v = std::stoull(r, &used);
            if (used != r.size()) throw std::invalid_argument(r);
            return {v, v};
        }
        const std::string a = r.substr(0, dots), b = r.substr(dots + 2);
        const auto lo = std::stoull(a, &used);
        if (used != a.size()) throw std::invalid_argument(r);
        const auto hi = std::stoull(b, &used);
        if (used != b.size()) throw std::invalid_argument(r);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw Failure{kUsage, "range must look like 2..7, got '" + r + "'"};
    }
}

void emit(bool as_json_output, const json& j, const std::string& plain) {
    if (as_json_output)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain << "\n";
}

int print_reports(const hnf_reports* r, bool as_json_output) {
    char* s = nullptr;
    if (as_json_output) {
        check(hnf_reports_json(r, &s));
        std::cout << json::parse(take(s)).dump(2) << "\n";
    } else {
        check(hnf_reports_text(r, &s));
        std::cout << take(s) << "\n";
    }
    int ok = 0;
    check(hnf_reports_ok(r, &ok));
    return ok ? kOk : kMismatch;
}

unsigned resolve_threads(unsigned requested) { return requested ? requested : hnf_default_threads(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unipotent classes on tensor and exterior squares in characteristic two"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(hnf_version()));
    bool use_json = false;
    app.add_flag("--json", use_json, "Print JSON instead of text");

    std::string a, b;
    auto* tensor = app.add_subcommand("tensor", "Jordan type of A (x) B");
    tensor->add_option("A", a, "Jordan type, e.g. 3 or 2^2,5")->required();
    tensor->add_option("B", b, "Jordan type")->required();

    auto* wedge = app.add_subcommand("wedge", "Jordan type of the exterior square");
    wedge->add_option("A", a, "Jordan type")->required();

    auto* tbil = app.add_subcommand("tensor-bilinear", "Hesselink form of S (x) T");
    tbil->add_option("S", a, "symplectic type, e.g. 2_0^2,4_1")->required();
    tbil->add_option("T", b, "symplectic type")->required();

    auto* thm_a = app.add_subcommand("thmA", "Class of u on V (x) V* and on its irreducible subquotient");
    thm_a->add_option("J", a, "Jordan type of u on V")->required();

    auto* thm_c = app.add_subcommand("thmC", "Class of u on the exterior square and its irreducible subquotient");
    thm_c->add_option("S", a, "symplectic type of u on V")->required();

    std::uint64_t n = 0;
    auto* consec = app.add_subcommand("consec-ones", "Minimal alternating-sign binary expansion");
    consec->add_option("n", n, "positive integer")->required()->check(CLI::PositiveNumber);

    std::string which, range, golden;
    bool all = false;
    auto* table = app.add_subcommand("table", "Regenerate table A (SL) or C (Sp)");
    table->add_option("which", which, "A or C")->required()->check(CLI::IsMember({"A", "C"}));
    table->add_option("range", range, "dimension range lo..hi (n, with dim V = 2n for C)")->required();
    table->add_option("--golden", golden, "compare with a stored table, one row per line");
    table->add_flag("--all", all, "table C: keep alpha = 0 rows for n > 3");

    hnf_oracle_options opt = hnf_oracle_options_default();
    opt.max_dim = 12;
    unsigned threads = 0;
    auto* oracle = app.add_subcommand("oracle-check", "Compare the rules with explicit GF(2) matrices");
    oracle->add_option("--max-dim", opt.max_dim, "symplectic dimension bound (exterior square sweep)")
        ->check(CLI::Range(2, 32));
    oracle->add_option("--max-sl", opt.max_sl, "SL dimension bound (V (x) V* sweep)")->check(CLI::Range(2, 16));
    oracle->add_option("--max-product", opt.max_product, "dimension bound for bilinear tensor products")
        ->check(CLI::Range(4, 256));
    oracle->add_option("--max-jordan", opt.max_jordan, "dimension bound for Jordan-type checks")
        ->check(CLI::Range(1, 40));
    oracle->add_option("--threads", threads, "worker threads (default: HNF_THREADS or all cores)");

    std::uint64_t max_n = 40, max_dim = 60;
    std::string prop = "all";
    auto* dist = app.add_subcommand("distinguished", "Check which outputs are distinguished classes");
    dist->add_option("--prop", prop, "A-tensor, A-irr, tensor, C or all")
        ->check(CLI::IsMember({"A-tensor", "A-irr", "tensor", "C", "all"}));
    dist->add_option("--max-n", max_n, "bound on n for the A and C sweeps")->check(CLI::Range(2, 64));
    dist->add_option("--max-dim", max_dim, "bound on the product dimension for the tensor sweep")
        ->check(CLI::Range(4, 128));
    dist->add_option("--threads", threads, "worker threads (default: HNF_THREADS or all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*tensor) {
            const auto x = parse_jordan(a), y = parse_jordan(b);
            hnf_jordan* r = nullptr;
            check(hnf_tensor(x.get(), y.get(), &r));
            const Jordan out(r);
            emit(use_json, {{"command", "tensor"}, {"inputs", {as_json(x.get()), as_json(y.get())}},
                            {"result", as_json(out.get())}},
                 text(out.get()));
        } else if (*wedge) {
            const auto x = parse_jordan(a);
            hnf_jordan* r = nullptr;
            check(hnf_wedge_square(x.get(), &r));
            const Jordan out(r);
            emit(use_json, {{"command", "wedge"}, {"input", as_json(x.get())}, {"result", as_json(out.get())}},
                 text(out.get()));
        } else if (*tbil) {
            const auto x = parse_form(a), y = parse_form(b);
            hnf_form* r = nullptr;
            check(hnf_tensor_bilinear(x.get(), y.get(), &r));
            const Form out(r);
            emit(use_json, {{"command", "tensor-bilinear"}, {"inputs", {as_json(x.get()), as_json(y.get())}},
                            {"result", as_json(out.get())}},
                 text(out.get()));
        } else if (*thm_a || *thm_c) {
            hnf_form *amb = nullptr, *irr = nullptr;
            unsigned alpha = 0;
            json input;
            if (*thm_a) {
                const auto x = parse_jordan(a);
                check(hnf_theorem_A(x.get(), &amb, &irr, &alpha));
                input = as_json(x.get());
            } else {
                const auto x = parse_form(a);
                check(hnf_theorem_C(x.get(), &amb, &irr, &alpha));
                input = as_json(x.get());
            }
            const Form ambient(amb), irreducible(irr);
            emit(use_json,
                 {{"command", *thm_a ? "thmA" : "thmC"}, {"input", input}, {"alpha", alpha},
                  {"ambient", as_json(ambient.get())}, {"irreducible", as_json(irreducible.get())}},
                 text(ambient.get()) + " | " + text(irreducible.get()));
        } else if (*consec) {
            char* s = nullptr;
            check(hnf_consecutive_ones(n, &s));
            const std::string e = take(s);
            emit(use_json, {{"command", "consec-ones"}, {"n", n}, {"expansion", e}}, e);
        } else if (*table) {
            const auto [lo, hi] = parse_range(range);
            char* s = nullptr;
            check(hnf_table(which[0], lo, hi, all ? 1 : 0, &s));
            const std::string rows = take(s);
            json j{{"command", "table"}, {"which", which}, {"lo", lo}, {"hi", hi}, {"rows", json::array()}};
            for (std::size_t start = 0; start <= rows.size() && !rows.empty();) {
                const auto end = rows.find('\n', start);
                j["rows"].push_back(rows.substr(start, end == std::string::npos ? std::string::npos : end - start));
                if (end == std::string::npos) break;
                start = end + 1;
            }
            if (golden.empty()) {
                emit(use_json, j, rows);
                return kOk;
            }
            char* report = nullptr;
            const hnf_status st = hnf_table_compare(rows.c_str(), golden.c_str(), &report);
            if (st != HNF_OK && st != HNF_MISMATCH) check(st);
            const std::string diffs = take(report);
            j["golden"] = {{"path", golden}, {"match", st == HNF_OK}, {"differences", diffs}};
            const std::size_t count = j["rows"].size();
            emit(use_json, j,
                 rows + "\n" + (st == HNF_OK ? "golden: " + std::to_string(count) + " rows match " + golden
                                             : "golden mismatch against " + golden + "\n" + diffs));
            return st == HNF_OK ? kOk : kMismatch;
        } else if (*oracle) {
            opt.threads = resolve_threads(threads);
            hnf_reports* r = nullptr;
            check(hnf_oracle_check(&opt, &r));
            const Reports reports(r);
            return print_reports(reports.get(), use_json);
        } else if (*dist) {
            const unsigned t = resolve_threads(threads);
            struct Item {
                const char* name;
                hnf_prop which;
                std::uint64_t bound;
            };
            const std::vector<Item> items{{"A-tensor", HNF_PROP_A_TENSOR, max_n},
                                          {"A-irr", HNF_PROP_A_IRR, max_n},
                                          {"tensor", HNF_PROP_TENSOR, max_dim},
                                          {"C", HNF_PROP_C, max_n}};
            Reports all_reports;
            for (const auto& item : items) {
                if (prop != "all" && prop != item.name) continue;
                hnf_reports* r = nullptr;
                check(hnf_verify_prop(item.which, item.bound, t, &r));
                if (!all_reports) {
                    all_reports.reset(r);
                } else {
                    const Reports part(r);
                    check(hnf_reports_append(all_reports.get(), part.get()));
                }
            }
            return print_reports(all_reports.get(), use_json);
        }
    } catch (const Failure& f) {
        std::cerr << "hnf: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "hnf: " << e.what() << "\n";
        return kMismatch;
    }
    return kOk;
}
