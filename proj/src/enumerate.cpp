#include "enumerate.hpp"

#include "errors.hpp"

namespace hnf::enumerate {

using hesselink::Entry;
using jordan::JordanType;

namespace {

void partition_rec(std::uint64_t rest, std::uint64_t max, std::vector<JordanType::Block>& cur,
                   const std::function<void(const JordanType&)>& visit) {
    if (rest == 0) {
        visit(JordanType::from_blocks(cur));
        return;
    }
    for (std::uint64_t d = std::min(rest, max); d >= 1; --d)
        for (std::uint64_t m = rest / d; m >= 1; --m) {
            cur.emplace_back(d, m);
            partition_rec(rest - d * m, d - 1, cur, visit);
            cur.pop_back();
        }
}

void symplectic_rec(std::uint64_t rest, std::uint64_t max, std::vector<Entry>& cur,
                    const std::function<void(const hesselink::SymplecticType&)>& visit) {
    if (rest == 0) {
        visit(hesselink::validate_symplectic(hesselink::EpsilonTaggedType::from_entries(cur)));
        return;
    }
    for (std::uint64_t d = std::min(rest, max); d >= 1; --d)
        for (std::uint64_t m = rest / d; m >= 1; --m) {
            for (int eps = 1; eps >= 0; --eps) {
                if (eps == 1 && d % 2 != 0) continue;
                if (eps == 0 && m % 2 != 0) continue;
                cur.push_back({d, m, eps == 1});
                symplectic_rec(rest - d * m, d - 1, cur, visit);
                cur.pop_back();
            }
        }
}

} // namespace

void for_each_partition(std::uint64_t n, const std::function<void(const JordanType&)>& visit) {
    std::vector<JordanType::Block> cur;
    partition_rec(n, n, cur, visit);
}

std::vector<JordanType> partitions(std::uint64_t n) {
    std::vector<JordanType> out;
    for_each_partition(n, [&](const JordanType& j) { out.push_back(j); });
    return out;
}

void for_each_symplectic(std::uint64_t dim, const std::function<void(const hesselink::SymplecticType&)>& visit) {
    if (dim % 2 != 0) throw InvalidArgument("symplectic dimension must be even");
    std::vector<Entry> cur;
    symplectic_rec(dim, dim, cur, visit);
}

void for_each_symplectic_largest(std::uint64_t dim, std::uint64_t largest,
                                 const std::function<void(const hesselink::SymplecticType&)>& visit) {
    if (dim % 2 != 0) throw InvalidArgument("symplectic dimension must be even");
    if (largest == 0 || largest > dim) return;
    std::vector<Entry> cur;
    const std::uint64_t d = largest;
    for (std::uint64_t m = dim / d; m >= 1; --m)
        for (int eps = 1; eps >= 0; --eps) {
            if (eps == 1 && d % 2 != 0) continue;
            if (eps == 0 && m % 2 != 0) continue;
            cur.push_back({d, m, eps == 1});
            symplectic_rec(dim - d * m, d - 1, cur, visit);
            cur.pop_back();
        }
}

std::vector<hesselink::SymplecticType> symplectic_types(std::uint64_t dim) {
    std::vector<hesselink::SymplecticType> out;
    for_each_symplectic(dim, [&](const hesselink::SymplecticType& s) { out.push_back(s); });
    return out;
}

std::string partition_cell(const JordanType& j) {
    std::string out = "(";
    bool first = true;
    for (const auto& [d, m] : j.blocks()) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(d);
        if (m != 1) out += '^' + std::to_string(m);
    }
    return out + ")";
}

} // namespace hnf::enumerate
