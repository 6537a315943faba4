#pragma once

#include "hesselink.hpp"
#include "jordan.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hnf::enumerate {

// Partitions of n, largest parts first, in reverse lexicographic order of the
// descending part sequence (the order used by the published tables).
void for_each_partition(std::uint64_t n, const std::function<void(const jordan::JordanType&)>& visit);
std::vector<jordan::JordanType> partitions(std::uint64_t n);

// Symplectic types of the given (even) dimension: partitions whose odd parts
// have even multiplicity, with every admissible tag choice. Within one
// partition, tags are chosen from the largest size down, 1 before 0.
void for_each_symplectic(std::uint64_t dim, const std::function<void(const hesselink::SymplecticType&)>& visit);
std::vector<hesselink::SymplecticType> symplectic_types(std::uint64_t dim);
// The slice of for_each_symplectic whose largest block size is `largest`.
void for_each_symplectic_largest(std::uint64_t dim, std::uint64_t largest,
                                 const std::function<void(const hesselink::SymplecticType&)>& visit);

// "(1^2, 2)" for the Jordan type {1:2, 2:1}.
std::string partition_cell(const jordan::JordanType& j);

} // namespace hnf::enumerate
