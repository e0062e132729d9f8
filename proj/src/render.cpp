#include "lqbetti/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lqb {

std::string render_betti_grid(const BettiTable& t, bool diagonal) {
    if (t.empty()) return "(zero table)\n";

    int i_max = t.max_homological_degree();
    int c_min = 0, c_max = 0;
    bool first = true;
    for (const auto& [k, v] : t.entries()) {
        int c = diagonal ? k.second - k.first : k.second;
        c_min = first ? c : std::min(c_min, c);
        c_max = first ? c : std::max(c_max, c);
        first = false;
    }

    auto cell = [&](int i, int c) -> std::string {
        std::int64_t v = t.get(i, diagonal ? c + i : c);
        return v == 0 ? "." : std::to_string(v);
    };

    std::size_t label_w = std::to_string(i_max).size() + 1;
    std::vector<std::size_t> col_w(c_max - c_min + 1);
    for (int c = c_min; c <= c_max; ++c) {
        std::size_t w = std::to_string(c).size();
        for (int i = 0; i <= i_max; ++i) w = std::max(w, cell(i, c).size());
        col_w[c - c_min] = w;
    }

    std::ostringstream out;
    out << std::string(label_w + 1, ' ') << (diagonal ? "j-i" : "j");
    out << "\n" << std::string(label_w + 1, ' ');
    for (int c = c_min; c <= c_max; ++c) {
        std::string h = std::to_string(c);
        out << std::string(col_w[c - c_min] - h.size() + 2, ' ') << h;
    }
    out << "\n";
    for (int i = 0; i <= i_max; ++i) {
        std::string label = std::to_string(i) + ":";
        out << std::string(label_w - label.size() + 1, ' ') << label;
        for (int c = c_min; c <= c_max; ++c) {
            std::string s = cell(i, c);
            out << std::string(col_w[c - c_min] - s.size() + 2, ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json betti_to_json(const BettiTable& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : t.entries())
        arr.push_back({{"i", k.first}, {"j", k.second}, {"v", v}});
    return arr;
}

BettiTable betti_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("betti JSON must be an array");
    BettiTable t;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("v"))
            throw std::invalid_argument("betti entry needs i, j, v");
        t.add(e["i"].get<int>(), e["j"].get<int>(), e["v"].get<std::int64_t>());
    }
    return t;
}

nlohmann::json ring_to_json(const std::vector<std::string>& var_names,
                            const FieldSpec& field, const OrderSpec& order) {
    return {{"vars", var_names}, {"field", field.str()}, {"order", order.str()}};
}

} // namespace lqb
