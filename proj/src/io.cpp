#include "anforge/io.hpp"

#include <fstream>
#include <sstream>

namespace anforge::io {

namespace {

std::vector<Sym> sym_vector(const json& j, int q, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
    std::vector<Sym> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !v.is_number_integer())
            throw input_error(std::string(what) + " entries must be integers");
        long long x = v.get<long long>();
        if (x < 0 || x >= q) throw input_error(std::string(what) + " entry out of range");
        out.push_back(static_cast<Sym>(x));
    }
    return out;
}

int int_field(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key)) throw input_error(std::string("missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw input_error(std::string("field \"") + key + "\" must be an integer");
    long long x = v.get<long long>();
    if (x < lo || x > hi) throw input_error(std::string("field \"") + key + "\" out of range");
    return static_cast<int>(x);
}

} // namespace

json to_json(const AutomataNetwork& net) {
    json rules = json::array();
    for (const LocalRule& rule : net.rules)
        rules.push_back({{"inputs", rule.inputs}, {"table", rule.table}});
    return {{"n", net.n}, {"q", net.q}, {"rules", rules}};
}

AutomataNetwork network_from_json(const json& j) {
    AutomataNetwork net;
    net.n = int_field(j, "n", 1, 1 << 26);
    net.q = int_field(j, "q", 2, 1 << 16);
    if (!j.contains("rules") || !j.at("rules").is_array())
        throw input_error("network JSON needs a \"rules\" array");
    for (const auto& r : j.at("rules")) {
        LocalRule rule;
        if (!r.contains("inputs") || !r.at("inputs").is_array())
            throw input_error("rule needs an \"inputs\" array");
        for (const auto& v : r.at("inputs")) {
            long long x = v.get<long long>();
            if (x < 1 || x > net.n) throw input_error("rule input out of range");
            rule.inputs.push_back(static_cast<int>(x));
        }
        if (!r.contains("table")) throw input_error("rule needs a \"table\" array");
        rule.table = sym_vector(r.at("table"), net.q, "rule table");
        net.rules.push_back(std::move(rule));
    }
    validate(net);
    return net;
}

json to_json(const GlobalMap& map) {
    return {{"n", map.n}, {"q", map.q}, {"images", map.images}};
}

GlobalMap global_map_from_json(const json& j) {
    GlobalMap map;
    map.n = int_field(j, "n", 1, 1 << 26);
    map.q = int_field(j, "q", 2, 1 << 16);
    if (!j.contains("images") || !j.at("images").is_array())
        throw input_error("global map JSON needs an \"images\" array");
    std::uint64_t size = checked_pow(static_cast<std::uint64_t>(map.q), map.n);
    for (const auto& v : j.at("images")) {
        long long x = v.get<long long>();
        if (x < 0 || static_cast<std::uint64_t>(x) >= size)
            throw input_error("global map image out of range");
        map.images.push_back(static_cast<Index>(x));
    }
    validate(map);
    return map;
}

json to_json(const galois::FieldSpec& spec) {
    return {{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}};
}

galois::FieldSpec field_spec_from_json(const json& j) {
    galois::FieldSpec spec;
    spec.p = static_cast<std::uint32_t>(int_field(j, "p", 2, 1 << 16));
    spec.m = static_cast<std::uint32_t>(int_field(j, "m", 1, 64));
    if (!galois::is_prime(spec.p)) throw input_error("field characteristic must be prime");
    spec.modulus = sym_vector(j.at("modulus"), static_cast<int>(spec.p), "modulus");
    if (spec.modulus.size() != spec.m + 1 || spec.modulus.back() != 1)
        throw input_error("modulus must be monic of degree m");
    return spec;
}

json to_json(const dynamics::CycleStructure& cs) {
    json cycles = json::array();
    for (const auto& c : cs.cycles)
        cycles.push_back({{"length", c.length},
                          {"transient_size", c.transient_size},
                          {"representative", c.representative}});
    return {{"cycles", cycles},
            {"cycle_lengths", cs.cycle_lengths()},
            {"fixed_points", cs.fixed_points},
            {"parity", cs.parity}};
}

json to_json(const dynamics::PreimageProfile& profile) {
    json histogram = json::object();
    for (const auto& [k, members] : profile.classes)
        histogram[std::to_string(k)] = members.size();
    json pairs = json::array();
    for (auto [x, y] : profile.collision_pairs) pairs.push_back({x, y});
    return {{"rank", profile.rank},
            {"preimage_histogram", histogram},
            {"orphan_count", profile.orphans().size()},
            {"max_preimage_count", profile.max_preimage_count},
            {"collision_pair_count", profile.collision_pair_count},
            {"collision_pairs", pairs},
            {"collisions_truncated", profile.collisions_truncated}};
}

bool looks_like_network(const json& j) {
    if (j.contains("rules")) return true;
    if (j.contains("images")) return false;
    throw input_error("JSON carries neither \"rules\" nor \"images\"");
}

std::string interaction_graph_dot(const structure::InteractionGraph& g) {
    std::ostringstream out;
    out << "digraph {\n";
    for (int v = 1; v <= g.n; ++v) out << "  " << v << ";\n";
    for (auto [i, j] : g.arcs) out << "  " << i << " -> " << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string dynamics_dot(const GlobalMap& map) {
    ConfigSpace space(map.n, map.q);
    std::ostringstream out;
    out << "digraph {\n";
    for (std::size_t x = 0; x < map.images.size(); ++x)
        out << "  \"" << space.format(static_cast<Index>(x)) << "\" -> \""
            << space.format(map.images[x]) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string certificate_hex(const dynamics::CanonicalForm& form) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(form.certificate.size() * 2);
    for (unsigned char c : form.certificate) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << text;
}

} // namespace anforge::io
