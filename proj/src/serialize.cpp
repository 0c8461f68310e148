#include "simdiag/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace simdiag {

namespace {

std::string hex_mask(std::uint64_t mask) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(mask));
    return buf;
}

nlohmann::json pair_list(const std::vector<std::pair<int, int>>& pairs) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
}

}  // namespace

nlohmann::json circuit_to_json(const CliffordCircuit& c) {
    return nlohmann::json{
        {"n_qubits", c.n_qubits}, {"h_pre", c.h_pre},     {"cnot", pair_list(c.cnots)},
        {"cz", pair_list(c.czs)}, {"s", c.s_layer},       {"h_post", c.h_post},
    };
}

CliffordCircuit circuit_from_json(const nlohmann::json& j) {
    CliffordCircuit c;
    c.n_qubits = j.at("n_qubits").get<int>();
    c.h_pre = j.at("h_pre").get<std::vector<int>>();
    c.s_layer = j.at("s").get<std::vector<int>>();
    c.h_post = j.at("h_post").get<std::vector<int>>();
    for (const auto& p : j.at("cnot")) {
        c.cnots.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    }
    for (const auto& p : j.at("cz")) {
        c.czs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    }
    return c;
}

nlohmann::json diagonal_group_to_json(const DiagonalGroup& g) {
    nlohmann::json masks = nlohmann::json::array();
    for (auto m : g.z_masks) masks.push_back(hex_mask(m));
    return nlohmann::json{
        {"group", g.group_index},
        {"circuit", circuit_to_json(g.circuit)},
        {"z_masks", masks},
        {"coeffs", g.signed_coeffs},
    };
}

nlohmann::json diag_document(int n_qubits, std::span<const DiagonalGroup> groups) {
    nlohmann::json out;
    out["n_qubits"] = n_qubits;
    out["n_groups"] = groups.size();
    out["groups"] = nlohmann::json::array();
    for (const auto& g : groups) {
        out["groups"].push_back(diagonal_group_to_json(g));
    }
    return out;
}

}  // namespace simdiag
