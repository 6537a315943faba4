#include "hnf/hnf.h"

#include "checks.hpp"
#include "distinguished.hpp"
#include "errors.hpp"
#include "hesselink.hpp"
#include "jordan.hpp"
#include "json_io.hpp"
#include "parallel.hpp"
#include "reps.hpp"
#include "tables.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>

struct hnf_jordan {
    hnf::jordan::JordanType value;
};

struct hnf_form {
    hnf::hesselink::EpsilonTaggedType value;
};

struct hnf_reports {
    std::vector<hnf::Report> items;
};

namespace {

using hnf::hesselink::EpsilonTaggedType;
using hnf::hesselink::SymplecticType;
using hnf::jordan::JordanType;

thread_local std::string last_error;
thread_local std::int64_t last_position = -1;

hnf_status fail(hnf_status s, const char* what, std::int64_t position = -1) {
    last_error = what;
    last_position = position;
    return s;
}

// Runs f, mapping exceptions to status codes.
template <class F>
hnf_status guard(F&& f) noexcept {
    try {
        last_error.clear();
        last_position = -1;
        return f();
    } catch (const hnf::ParseError& e) {
        return fail(HNF_PARSE_ERROR, e.what(), static_cast<std::int64_t>(e.position()));
    } catch (const hnf::ConstraintViolation& e) {
        return fail(HNF_CONSTRAINT, e.what());
    } catch (const hnf::DegenerateForm& e) {
        return fail(HNF_DEGENERATE, e.what());
    } catch (const hnf::NotUnipotent& e) {
        return fail(HNF_NOT_UNIPOTENT, e.what());
    } catch (const std::overflow_error& e) {
        return fail(HNF_OVERFLOW, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HNF_INVALID_ARGUMENT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(HNF_PARSE_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HNF_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HNF_INTERNAL, e.what());
    } catch (...) {
        return fail(HNF_INTERNAL, "unknown exception");
    }
}

template <class T>
const T& deref(const T* p) {
    if (!p) throw hnf::InvalidArgument("null handle");
    return *p;
}

template <class T>
T& out_ref(T* p) {
    if (!p) throw hnf::InvalidArgument("null output pointer");
    return *p;
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

const char* text_arg(const char* s) {
    if (!s) throw hnf::InvalidArgument("null string");
    return s;
}

hnf_status put(hnf_jordan** out, JordanType v) {
    out_ref(out) = new hnf_jordan{std::move(v)};
    return HNF_OK;
}

hnf_status put(hnf_form** out, EpsilonTaggedType v) {
    out_ref(out) = new hnf_form{std::move(v)};
    return HNF_OK;
}

hnf_status put(char** out, const std::string& s) {
    out_ref(out) = dup(s);
    return HNF_OK;
}

SymplecticType symplectic(const hnf_form* f) { return hnf::hesselink::validate_symplectic(deref(f).value); }

std::string join(const std::vector<std::string>& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += '\n';
        out += rows[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> rows;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            rows.push_back(text.substr(start));
            break;
        }
        rows.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return rows;
}

} // namespace

extern "C" {

const char* hnf_version(void) { return "1.0.0"; }

const char* hnf_status_name(hnf_status s) {
    switch (s) {
    case HNF_OK: return "ok";
    case HNF_INVALID_ARGUMENT: return "invalid argument";
    case HNF_PARSE_ERROR: return "parse error";
    case HNF_CONSTRAINT: return "constraint violation";
    case HNF_OVERFLOW: return "overflow";
    case HNF_DEGENERATE: return "degenerate form";
    case HNF_NOT_UNIPOTENT: return "not unipotent";
    case HNF_MISMATCH: return "mismatch";
    case HNF_IO_ERROR: return "i/o error";
    case HNF_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* hnf_last_error(void) { return last_error.c_str(); }
int64_t hnf_last_error_position(void) { return last_position; }
void hnf_string_free(char* s) { std::free(s); }
unsigned hnf_default_threads(void) { return hnf::default_threads(); }

hnf_status hnf_jordan_parse(const char* text, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::jordan::parse(text_arg(text))); });
}

hnf_status hnf_jordan_from_json(const char* json, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::io::jordan_from_json(nlohmann::json::parse(text_arg(json)))); });
}

void hnf_jordan_free(hnf_jordan* j) { delete j; }

hnf_status hnf_jordan_format(const hnf_jordan* j, char** out) {
    return guard([&] { return put(out, hnf::jordan::to_string(deref(j).value)); });
}

hnf_status hnf_jordan_to_json(const hnf_jordan* j, char** out) {
    return guard([&] { return put(out, hnf::io::to_json(deref(j).value).dump()); });
}

hnf_status hnf_jordan_dimension(const hnf_jordan* j, uint64_t* out) {
    return guard([&] {
        out_ref(out) = deref(j).value.dimension();
        return HNF_OK;
    });
}

hnf_status hnf_jordan_block_count(const hnf_jordan* j, size_t* out) {
    return guard([&] {
        out_ref(out) = deref(j).value.blocks().size();
        return HNF_OK;
    });
}

hnf_status hnf_jordan_block(const hnf_jordan* j, size_t index, uint64_t* size, uint64_t* mult) {
    return guard([&] {
        const auto& blocks = deref(j).value.blocks();
        if (index >= blocks.size()) throw hnf::InvalidArgument("block index out of range");
        out_ref(size) = blocks[index].first;
        out_ref(mult) = blocks[index].second;
        return HNF_OK;
    });
}

hnf_status hnf_jordan_equal(const hnf_jordan* a, const hnf_jordan* b, int* out) {
    return guard([&] {
        out_ref(out) = deref(a).value == deref(b).value;
        return HNF_OK;
    });
}

hnf_status hnf_tensor_blocks(uint64_t m, uint64_t n, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::jordan::tensor_blocks(m, n)); });
}

hnf_status hnf_tensor(const hnf_jordan* a, const hnf_jordan* b, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::jordan::tensor(deref(a).value, deref(b).value)); });
}

hnf_status hnf_tensor_square_closed(uint64_t n, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::jordan::tensor_square_closed(n)); });
}

hnf_status hnf_wedge_block(uint64_t n, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::jordan::wedge_block(n)); });
}

hnf_status hnf_wedge_square(const hnf_jordan* j, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::jordan::wedge_square(deref(j).value)); });
}

hnf_status hnf_restrict_power(const hnf_jordan* j, unsigned alpha, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::jordan::restrict_power(deref(j).value, alpha)); });
}

hnf_status hnf_induce_power(const hnf_jordan* j, unsigned alpha, hnf_jordan** out) {
    return guard([&] { return put(out, hnf::jordan::induce_power(deref(j).value, alpha)); });
}

hnf_status hnf_consecutive_ones(uint64_t n, char** text) {
    return guard([&] { return put(text, hnf::jordan::to_string(hnf::jordan::consecutive_ones(n))); });
}

hnf_status hnf_unique_odd_block(uint64_t m, uint64_t n, uint64_t* out) {
    return guard([&] {
        out_ref(out) = hnf::jordan::unique_odd_block(m, n);
        return HNF_OK;
    });
}

hnf_status hnf_form_parse(const char* text, hnf_form** out) {
    return guard([&] { return put(out, hnf::hesselink::parse_tagged(text_arg(text))); });
}

hnf_status hnf_form_parse_symplectic(const char* text, hnf_form** out) {
    return guard([&] { return put(out, hnf::hesselink::parse_symplectic(text_arg(text)).tagged()); });
}

hnf_status hnf_form_from_json(const char* json, hnf_form** out) {
    return guard([&] { return put(out, hnf::io::tagged_from_json(nlohmann::json::parse(text_arg(json)))); });
}

void hnf_form_free(hnf_form* f) { delete f; }

hnf_status hnf_form_format(const hnf_form* f, char** out) {
    return guard([&] { return put(out, hnf::hesselink::to_string(deref(f).value)); });
}

hnf_status hnf_form_to_json(const hnf_form* f, char** out) {
    return guard([&] { return put(out, hnf::io::to_json(deref(f).value).dump()); });
}

hnf_status hnf_form_dimension(const hnf_form* f, uint64_t* out) {
    return guard([&] {
        out_ref(out) = deref(f).value.dimension();
        return HNF_OK;
    });
}

hnf_status hnf_form_entry_count(const hnf_form* f, size_t* out) {
    return guard([&] {
        out_ref(out) = deref(f).value.entries().size();
        return HNF_OK;
    });
}

hnf_status hnf_form_entry(const hnf_form* f, size_t index, uint64_t* size, uint64_t* mult, int* eps) {
    return guard([&] {
        const auto& entries = deref(f).value.entries();
        if (index >= entries.size()) throw hnf::InvalidArgument("entry index out of range");
        out_ref(size) = entries[index].size;
        out_ref(mult) = entries[index].mult;
        out_ref(eps) = entries[index].eps ? 1 : 0;
        return HNF_OK;
    });
}

hnf_status hnf_form_equal(const hnf_form* a, const hnf_form* b, int* out) {
    return guard([&] {
        out_ref(out) = deref(a).value == deref(b).value;
        return HNF_OK;
    });
}

hnf_status hnf_form_is_symplectic(const hnf_form* f, int* out) {
    return guard([&] {
        out_ref(out) = hnf::hesselink::is_symplectic(deref(f).value);
        return HNF_OK;
    });
}

hnf_status hnf_form_is_distinguished(const hnf_form* f, int* out) {
    return guard([&] {
        out_ref(out) = hnf::distinguished::is_distinguished(deref(f).value);
        return HNF_OK;
    });
}

hnf_status hnf_form_jordan(const hnf_form* f, hnf_jordan** out) {
    return guard([&] { return put(out, deref(f).value.jordan()); });
}

hnf_status hnf_orthogonal_sum(const hnf_form* a, const hnf_form* b, hnf_form** out) {
    return guard([&] { return put(out, hnf::hesselink::orthogonal_sum(symplectic(a), symplectic(b)).tagged()); });
}

hnf_status hnf_tensor_bilinear(const hnf_form* a, const hnf_form* b, hnf_form** out) {
    return guard([&] { return put(out, hnf::hesselink::tensor_bilinear(symplectic(a), symplectic(b)).tagged()); });
}

hnf_status hnf_restrict_bilinear(const hnf_form* f, unsigned alpha, hnf_form** out) {
    return guard([&] { return put(out, hnf::hesselink::restrict_bilinear(symplectic(f), alpha).tagged()); });
}

hnf_status hnf_induce_bilinear(const hnf_form* f, unsigned alpha, hnf_form** out) {
    return guard([&] { return put(out, hnf::hesselink::induce_bilinear(symplectic(f), alpha).tagged()); });
}

hnf_status hnf_theorem_A(const hnf_jordan* j, hnf_form** ambient, hnf_form** irreducible, unsigned* alpha) {
    return guard([&] {
        out_ref(ambient);
        out_ref(irreducible);
        auto r = hnf::reps::theorem_A(deref(j).value);
        if (alpha) *alpha = r.alpha;
        auto a = std::make_unique<hnf_form>(hnf_form{std::move(r.tensor_space)});
        *irreducible = new hnf_form{std::move(r.irreducible)};
        *ambient = a.release();
        return HNF_OK;
    });
}

hnf_status hnf_theorem_C(const hnf_form* f, hnf_form** ambient, hnf_form** irreducible, unsigned* alpha) {
    return guard([&] {
        out_ref(ambient);
        out_ref(irreducible);
        auto r = hnf::reps::theorem_C(symplectic(f));
        if (alpha) *alpha = r.alpha;
        auto a = std::make_unique<hnf_form>(hnf_form{std::move(r.wedge_space)});
        *irreducible = new hnf_form{std::move(r.irreducible)};
        *ambient = a.release();
        return HNF_OK;
    });
}

hnf_status hnf_table(char which, uint64_t lo, uint64_t hi, int all, char** out) {
    return guard([&] {
        if (lo < 2 || hi < lo) throw hnf::InvalidArgument("table range must satisfy 2 <= lo <= hi");
        if (which == 'A' || which == 'a') return put(out, join(hnf::tables::table_A(lo, hi)));
        if (which == 'C' || which == 'c') return put(out, join(hnf::tables::table_C(lo, hi, all != 0)));
        throw hnf::InvalidArgument("table must be A or C");
    });
}

hnf_status hnf_table_compare(const char* rows, const char* golden_path, char** report) {
    return guard([&] {
        out_ref(report);
        std::ifstream probe(text_arg(golden_path));
        if (!probe) return fail(HNF_IO_ERROR, (std::string("cannot open ") + golden_path).c_str());
        const auto diffs = hnf::tables::diff(split(text_arg(rows)), hnf::tables::read_lines(golden_path));
        *report = dup(join(diffs));
        return diffs.empty() ? HNF_OK : HNF_MISMATCH;
    });
}

hnf_oracle_options hnf_oracle_options_default(void) {
    const hnf::checks::OracleOptions d;
    return {d.max_dim, d.max_sl, d.max_product, d.max_jordan, hnf::default_threads()};
}

hnf_status hnf_oracle_check(const hnf_oracle_options* opt, hnf_reports** out) {
    return guard([&] {
        const auto& o = deref(opt);
        hnf::checks::OracleOptions c;
        c.max_dim = o.max_dim;
        c.max_sl = o.max_sl;
        c.max_product = o.max_product;
        c.max_jordan = o.max_jordan;
        c.threads = o.threads ? o.threads : 1;
        out_ref(out) = new hnf_reports{hnf::checks::oracle_check(c)};
        return HNF_OK;
    });
}

hnf_status hnf_verify_prop(hnf_prop which, uint64_t bound, unsigned threads, hnf_reports** out) {
    return guard([&] {
        out_ref(out);
        threads = threads ? threads : 1;
        hnf::Report r;
        switch (which) {
        case HNF_PROP_A_TENSOR: r = hnf::distinguished::verify_prop_A_tensor(bound, threads); break;
        case HNF_PROP_A_IRR: r = hnf::distinguished::verify_prop_A_irr(bound, threads); break;
        case HNF_PROP_TENSOR: r = hnf::distinguished::verify_prop_tensor(bound, threads); break;
        case HNF_PROP_C: r = hnf::distinguished::verify_prop_C(bound, threads); break;
        default: throw hnf::InvalidArgument("unknown proposition");
        }
        *out = new hnf_reports{{std::move(r)}};
        return HNF_OK;
    });
}

hnf_status hnf_reports_append(hnf_reports* dst, const hnf_reports* src) {
    return guard([&] {
        if (!dst) throw hnf::InvalidArgument("null handle");
        const auto items = deref(src).items;
        dst->items.insert(dst->items.end(), items.begin(), items.end());
        return HNF_OK;
    });
}

void hnf_reports_free(hnf_reports* r) { delete r; }

hnf_status hnf_reports_ok(const hnf_reports* r, int* out) {
    return guard([&] {
        bool ok = true;
        for (const auto& item : deref(r).items) ok = ok && item.ok();
        out_ref(out) = ok;
        return HNF_OK;
    });
}

hnf_status hnf_reports_count(const hnf_reports* r, size_t* out) {
    return guard([&] {
        out_ref(out) = deref(r).items.size();
        return HNF_OK;
    });
}

hnf_status hnf_reports_text(const hnf_reports* r, char** out) {
    return guard([&] {
        std::vector<std::string> lines;
        for (const auto& item : deref(r).items) lines.push_back(hnf::to_text(item));
        return put(out, join(lines));
    });
}

hnf_status hnf_reports_json(const hnf_reports* r, char** out) {
    return guard([&] {
        auto arr = nlohmann::json::array();
        bool ok = true;
        for (const auto& item : deref(r).items) {
            arr.push_back(hnf::to_json(item));
            ok = ok && item.ok();
        }
        return put(out, nlohmann::json{{"ok", ok}, {"reports", std::move(arr)}}.dump());
    });
}

} // extern "C"
