#include "tables.hpp"

#include "enumerate.hpp"
#include "errors.hpp"
#include "reps.hpp"

#include <fstream>

namespace hnf::tables {

std::vector<std::string> table_A(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::string> rows;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
        enumerate::for_each_partition(n, [&](const jordan::JordanType& j) {
            if (j.blocks().size() == 1 && j.blocks()[0].first == 1) return;
            const auto r = reps::theorem_A(j);
            rows.push_back(enumerate::partition_cell(j) + " | " + hesselink::to_cell(r.tensor_space) + " | " +
                           hesselink::to_cell(r.irreducible));
        });
    return rows;
}

std::vector<std::string> table_C(std::uint64_t lo, std::uint64_t hi, bool all) {
    std::vector<std::string> rows;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
        enumerate::for_each_symplectic(2 * n, [&](const hesselink::SymplecticType& s) {
            const auto& e = s.entries();
            if (e.size() == 1 && e[0].size == 1) return;
            const auto r = reps::theorem_C(s);
            if (!all && n > 3 && r.alpha == 0) return;
            rows.push_back(hesselink::to_cell(s) + " | " + hesselink::to_cell(r.wedge_space) + " | " +
                           hesselink::to_cell(r.irreducible) + " | " + std::to_string(r.alpha));
        });
    return rows;
}

std::vector<std::string> diff(const std::vector<std::string>& got, const std::vector<std::string>& want) {
    std::vector<std::string> out;
    const std::size_t n = std::max(got.size(), want.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::string g = i < got.size() ? got[i] : "<missing>";
        const std::string w = i < want.size() ? want[i] : "<missing>";
        if (g != w) out.push_back("row " + std::to_string(i + 1) + ": got '" + g + "', expected '" + w + "'");
    }
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

} // namespace hnf::tables
