#include "fairdist/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "fairdist/errors.hpp"

namespace fairdist {

namespace {

using nlohmann::json;

json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

const json& require_field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field: ") + name);
    return j.at(name);
}

std::string require_string(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

// Resolves labels to dense ids; the map is built over sorted unique labels.
std::map<std::string, int> label_index(const std::vector<std::string>& labels) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        index.emplace(labels[i], static_cast<int>(i));
    return index;
}

int resolve(const std::map<std::string, int>& index, const std::string& label,
            const char* what) {
    auto it = index.find(label);
    if (it == index.end())
        throw ParseError(std::string("unknown ") + what + ": " + label);
    return it->second;
}

}  // namespace

GraphDocument read_graph_document(std::istream& in) {
    const json doc = parse_json(in);

    const json& jvertices = require_field(doc, "vertices");
    if (!jvertices.is_array()) throw ParseError("vertices must be a list of labels");
    std::vector<std::string> labels;
    for (const json& v : jvertices) labels.push_back(require_string(v, "vertex label"));
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i] == labels[i - 1])
            throw ParseError("duplicate vertex label: " + labels[i]);
    const std::map<std::string, int> index = label_index(labels);

    const json& jedges = require_field(doc, "edges");
    if (!jedges.is_array()) throw ParseError("edges must be a list of label pairs");
    std::vector<std::pair<int, int>> edges;
    for (const json& e : jedges) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair of vertex labels");
        edges.emplace_back(resolve(index, require_string(e[0], "vertex label"), "vertex label"),
                           resolve(index, require_string(e[1], "vertex label"), "vertex label"));
    }

    GraphDocument out{Graph(static_cast<int>(labels.size()), std::move(edges), labels),
                      false,
                      std::vector<int>(labels.size(), -1),
                      {}};

    if (doc.contains("colors")) {
        const json& jcolors = doc.at("colors");
        if (!jcolors.is_object())
            throw ParseError("colors must map vertex labels to color names");
        out.has_colors = true;
        std::set<std::string> names;
        for (const auto& [label, name] : jcolors.items())
            names.insert(require_string(name, "color name"));
        out.color_names.assign(names.begin(), names.end());
        const std::map<std::string, int> color_index = label_index(out.color_names);
        for (const auto& [label, name] : jcolors.items())
            out.color[resolve(index, label, "vertex label")] =
                color_index.at(name.get<std::string>());
    }
    return out;
}

GraphDocument read_graph_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_graph_document(in);
}

GroupConstraints read_group_constraints(std::istream& in,
                                        const std::vector<std::string>& ground) {
    const json doc = parse_json(in);
    const std::map<std::string, int> index = label_index(ground);

    const json& jgroups = require_field(doc, "groups");
    if (!jgroups.is_object())
        throw ParseError("groups must map group names to element labels");

    GroupConstraints c;
    std::map<std::string, int> group_index;
    for (const auto& [name, jmembers] : jgroups.items()) {  // sorted name order
        if (!jmembers.is_array())
            throw ParseError("group " + name + " must list element labels");
        std::vector<int> members;
        for (const json& m : jmembers)
            members.push_back(resolve(index, require_string(m, "element label"),
                                      "element label"));
        group_index.emplace(name, static_cast<int>(c.groups.size()));
        c.names.push_back(name);
        c.groups.push_back(std::move(members));
        c.absolute.emplace_back(0, static_cast<int>(c.groups.back().size()));
    }

    if (doc.contains("absolute")) {
        const json& jabs = doc.at("absolute");
        if (!jabs.is_object())
            throw ParseError("absolute must map group names to [lo, hi] pairs");
        for (const auto& [name, jbounds] : jabs.items()) {
            auto it = group_index.find(name);
            if (it == group_index.end())
                throw ParseError("unknown group name: " + name);
            if (!jbounds.is_array() || jbounds.size() != 2 ||
                !jbounds[0].is_number_integer() || !jbounds[1].is_number_integer())
                throw ParseError("bounds for group " + name +
                                 " must be an integer pair [lo, hi]");
            c.absolute[it->second] = {jbounds[0].get<int>(), jbounds[1].get<int>()};
        }
    }

    if (doc.contains("relative")) {
        const json& jrel = doc.at("relative");
        if (!jrel.is_array()) throw ParseError("relative must be a list of caps");
        auto resolve_group = [&](const json& jcap, const char* field) {
            const std::string name = require_string(require_field(jcap, field), "group name");
            auto it = group_index.find(name);
            if (it == group_index.end()) throw ParseError("unknown group name: " + name);
            return it->second;
        };
        for (const json& jcap : jrel) {
            RelativeBound cap;
            cap.i = resolve_group(jcap, "i");
            cap.j = resolve_group(jcap, "j");
            cap.ratio = parse_rational(require_string(require_field(jcap, "ratio"),
                                                      "relative ratio"));
            c.relative.push_back(cap);
        }
    }
    return c;
}

GroupConstraints read_group_constraints_file(const std::string& path,
                                             const std::vector<std::string>& ground) {
    std::ifstream in = open_or_throw(path);
    return read_group_constraints(in, ground);
}

void write_distribution_document(std::ostream& out, const FairnessResult& res,
                                 const std::vector<std::string>& ground) {
    json doc;
    doc["measure"] = to_string(res.measure);
    doc["value"] = format_rational(res.value);
    json support = json::array();
    for (const auto& entry : res.distribution.support) {
        json member = json::array();
        for (int a : entry.member) member.push_back(ground.at(a));
        support.push_back({{"member", std::move(member)},
                           {"probability", format_rational(entry.probability)}});
    }
    doc["support"] = std::move(support);
    json coverage;
    for (std::size_t a = 0; a < ground.size(); ++a)
        coverage[ground[a]] = format_rational(res.coverage.at(a));
    doc["coverage"] = std::move(coverage);
    doc["columns_generated"] = res.columns_generated;
    out << doc.dump(2) << '\n';
}

DistributionDocument read_distribution_document(std::istream& in) {
    const json doc = parse_json(in);
    const json& jsupport = require_field(doc, "support");
    if (!jsupport.is_array()) throw ParseError("support must be a list of entries");
    DistributionDocument out;
    for (const json& jentry : jsupport) {
        const json& jmember = require_field(jentry, "member");
        if (!jmember.is_array())
            throw ParseError("each member must be a list of element labels");
        std::vector<std::string> member;
        for (const json& m : jmember) member.push_back(require_string(m, "element label"));
        out.members.push_back(std::move(member));
        out.probabilities.push_back(
            parse_rational(require_string(require_field(jentry, "probability"),
                                          "probability")));
    }
    return out;
}

DistributionDocument read_distribution_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_distribution_document(in);
}

}  // namespace fairdist
