#include "json_io.hpp"

#include "errors.hpp"

namespace hnf::io {

namespace {

std::uint64_t positive(const nlohmann::json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw InvalidArgument(std::string("json: missing \"") + key + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        throw InvalidArgument(std::string("json: \"") + key + "\" must be a positive integer");
    return v.get<std::uint64_t>();
}

const nlohmann::json& array_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw InvalidArgument(std::string("json: expected an array \"") + key + "\"");
    return j.at(key);
}

} // namespace

nlohmann::json to_json(const jordan::JordanType& j) {
    auto blocks = nlohmann::json::array();
    for (const auto& [d, m] : j.blocks()) blocks.push_back({{"size", d}, {"mult", m}});
    return {{"text", jordan::to_string(j)}, {"dimension", j.dimension()}, {"blocks", std::move(blocks)}};
}

nlohmann::json to_json(const hesselink::EpsilonTaggedType& t) {
    auto entries = nlohmann::json::array();
    for (const auto& e : t.entries()) entries.push_back({{"size", e.size}, {"mult", e.mult}, {"eps", e.eps ? 1 : 0}});
    return {{"text", hesselink::to_string(t)}, {"dimension", t.dimension()}, {"entries", std::move(entries)}};
}

jordan::JordanType jordan_from_json(const nlohmann::json& j) {
    std::vector<jordan::JordanType::Block> blocks;
    for (const auto& b : array_field(j, "blocks")) blocks.emplace_back(positive(b, "size"), positive(b, "mult"));
    return jordan::JordanType::from_blocks(std::move(blocks));
}

hesselink::EpsilonTaggedType tagged_from_json(const nlohmann::json& j) {
    std::vector<hesselink::Entry> entries;
    for (const auto& e : array_field(j, "entries")) {
        const auto& eps = e.contains("eps") ? e.at("eps") : nlohmann::json();
        if (!eps.is_number_unsigned() || eps.get<std::uint64_t>() > 1)
            throw InvalidArgument("json: \"eps\" must be 0 or 1");
        entries.push_back({positive(e, "size"), positive(e, "mult"), eps.get<std::uint64_t>() == 1});
    }
    return hesselink::EpsilonTaggedType::from_entries(std::move(entries));
}

} // namespace hnf::io
