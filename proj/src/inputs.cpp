#include "coideal/inputs.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "coideal/error.hpp"

namespace coideal {

using nlohmann::json;

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\n\r"), e = s.find_last_not_of(" \t\n\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Integer suffix after a name prefix, e.g. "trans4" -> 4; -1 if absent.
int suffix_number(const std::string& s, const std::string& prefix) {
    if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size()) return -1;
    std::string rest = s.substr(prefix.size());
    if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return -1;
    return std::stoi(rest);
}

struct Call {
    std::string name;
    std::vector<std::pair<std::string, std::string>> args;  // (key or "", value)
};

Call parse_call(const std::string& text) {
    std::string s = trim(text);
    size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw Error("ParseError", "expected name(args) in '" + s + "' at column " +
                                      std::to_string(open == std::string::npos ? s.size() : s.size() - 1));
    Call c;
    c.name = trim(s.substr(0, open));
    std::string body = s.substr(open + 1, s.size() - open - 2);
    int depth = 0;
    size_t start = 0;
    auto push = [&](size_t end) {
        std::string piece = trim(body.substr(start, end - start));
        if (piece.empty()) {
            if (end == body.size() && c.args.empty() && start == 0) return;
            throw Error("ParseError", "empty argument at column " + std::to_string(open + 1 + start));
        }
        size_t eq = piece.find('=');
        if (eq != std::string::npos)
            c.args.emplace_back(trim(piece.substr(0, eq)), trim(piece.substr(eq + 1)));
        else
            c.args.emplace_back("", piece);
    };
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        if (body[i] == ')' && --depth < 0) throw Error("ParseError", "unbalanced ')' at column " + std::to_string(open + 1 + i));
        if (body[i] == ',' && depth == 0) {
            push(i);
            start = i + 1;
        }
    }
    if (depth != 0) throw Error("ParseError", "unbalanced '(' in '" + s + "'");
    push(body.size());
    return c;
}

// Binds positional and named arguments to the parameter list; missing ones stay empty.
std::map<std::string, std::string> bind(const Call& c, const std::vector<std::string>& params,
                                        const std::map<std::string, std::string>& aliases = {}) {
    std::map<std::string, std::string> out;
    size_t pos = 0;
    for (const auto& [k, v] : c.args) {
        std::string key = k;
        if (auto it = aliases.find(key); it != aliases.end()) key = it->second;
        if (key.empty()) {
            if (pos >= params.size()) throw Error("ParseError", c.name + ": too many arguments");
            key = params[pos++];
        } else if (std::find(params.begin(), params.end(), key) == params.end()) {
            throw Error("ParseError", c.name + ": unknown argument '" + k + "'");
        }
        if (out.count(key)) throw Error("ParseError", c.name + ": argument '" + key + "' given twice");
        out[key] = v;
    }
    return out;
}

void require_rack(const Rack& given, const Rack& model, const std::string& family) {
    if (given.rows() != model.rows())
        throw Error("RackMismatch", family + " lives on a rack with " + std::to_string(model.size()) +
                                        " elements and a different table than the given one");
}

}  // namespace

Rack parse_rack(const std::string& spec_in) {
    std::string spec = trim(spec_in);
    if (ends_with(spec, ".json")) return rack_from_json(read_json_file(spec));
    std::string s;
    for (char ch : spec) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (s == "tetrahedron" || s == "tetra") return tetrahedron();
    if (s == "cube") return cube();
    if (s == "point") return trivial_rack(1);
    for (const char* p : {"transpositions", "trans"})
        if (int n = suffix_number(s, p); n >= 0) {
            if (n < 2) throw Error("ParseError", "transpositions need n >= 2");
            return transpositions(n);
        }
    if (int k = suffix_number(s, "trivial"); k >= 1) return trivial_rack(k);
    if (int n = suffix_number(s, "dihedral"); n >= 1) return dihedral_quandle(n);
    throw Error("UnknownRack", "unknown rack '" + spec + "'");
}

Rack rack_from_json(const json& j) {
    if (!j.is_object() || !j.contains("table")) throw Error("ParseError", "rack JSON needs a \"table\" field");
    std::vector<std::vector<int>> table;
    std::vector<std::string> labels;
    try {
        table = j.at("table").get<std::vector<std::vector<int>>>();
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw Error("ParseError", std::string("rack JSON: ") + e.what());
    }
    return make_rack(std::move(table), std::move(labels));
}

json rack_to_json(const Rack& r) { return json{{"table", r.rows()}, {"labels", r.labels()}}; }

Cocycle parse_cocycle(const Rack& r, const std::string& spec_in) {
    std::string spec = trim(spec_in);
    if (ends_with(spec, ".json")) return cocycle_from_json(r, read_json_file(spec));
    Call c = parse_call(spec);
    std::string name;
    for (char ch : c.name) name += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const std::map<std::string, std::string> lam{{"lambda", "l"}};

    auto integer = [&](const std::string& v, const std::string& what) {
        std::string t = trim(v);
        if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit))
            throw Error("ParseError", name + ": " + what + " must be a positive integer, got '" + v + "'");
        return std::stoi(t);
    };
    // Parses the scalar arguments over one jointly inferred domain.
    auto scalars = [&](const std::map<std::string, std::string>& a, const std::vector<std::string>& keys) {
        std::vector<std::string> exprs;
        for (const auto& k : keys) {
            auto it = a.find(k);
            if (it == a.end()) throw Error("ParseError", name + ": missing argument '" + k + "'");
            exprs.push_back(it->second);
        }
        const ScalarDomain* d = infer_domain(exprs);
        std::vector<Scalar> out;
        for (const auto& e : exprs) out.push_back(parse_scalar(e, d));
        return out;
    };

    if (name == "const") {
        auto a = bind(c, {"c"});
        return constant(r, scalars(a, {"c"})[0]);
    }
    if (name == "chi") {
        auto a = bind(c, {"n"});
        int n = a.count("n") ? integer(a["n"], "n") : -1;
        if (n < 0) {
            auto id = identify_standard(r);
            if (id.kind != StandardKind::Transpositions) throw Error("RackMismatch", "chi needs a transposition rack");
            n = id.n;
        }
        Cocycle q = chi(n);
        require_rack(r, q.rack(), "chi(" + std::to_string(n) + ")");
        return q;
    }
    if (name == "t3") {
        auto a = bind(c, {"t"});
        Cocycle q = model_T3(scalars(a, {"t"})[0]);
        require_rack(r, q.rack(), "t3");
        return q;
    }
    if (name == "tn") {
        auto a = bind(c, {"n", "t", "l"}, lam);
        if (!a.count("n")) throw Error("ParseError", "tn: missing argument 'n'");
        int n = integer(a["n"], "n");
        auto s = scalars(a, {"t", "l"});
        Cocycle q = model_Tn(n, s[0], s[1]);
        require_rack(r, q.rack(), "tn(" + std::to_string(n) + ")");
        return q;
    }
    if (name == "tetra" || name == "cube") {
        auto a = bind(c, {"t", "l"}, lam);
        auto s = scalars(a, {"t", "l"});
        Cocycle q = name == "tetra" ? model_tetra(s[0], s[1]) : model_cube(s[0], s[1]);
        require_rack(r, q.rack(), name);
        return q;
    }
    throw Error("ParseError", "unknown cocycle family '" + c.name + "'");
}

Cocycle cocycle_from_json(const Rack& r, const json& j) {
    if (!j.is_object() || !j.contains("q")) throw Error("ParseError", "cocycle JSON needs a \"q\" field");
    std::vector<std::vector<std::string>> cells;
    try {
        for (const auto& row : j.at("q")) {
            cells.emplace_back();
            for (const auto& e : row) cells.back().push_back(e.is_string() ? e.get<std::string>() : e.dump());
        }
    } catch (const json::exception& e) {
        throw Error("ParseError", std::string("cocycle JSON: ") + e.what());
    }
    std::vector<std::string> flat;
    for (const auto& row : cells) flat.insert(flat.end(), row.begin(), row.end());
    const ScalarDomain* d = infer_domain(flat);
    std::vector<std::vector<Scalar>> q;
    for (const auto& row : cells) {
        q.emplace_back();
        for (const auto& e : row) q.back().push_back(parse_scalar(e, d));
    }
    return validate(r, q, d);
}

json cocycle_to_json(const Cocycle& q) {
    json rows = json::array();
    for (int x = 0; x < q.size(); ++x) {
        json row = json::array();
        for (int y = 0; y < q.size(); ++y) row.push_back(q.q(x, y).str());
        rows.push_back(std::move(row));
    }
    return json{{"q", rows}, {"domain", q.domain() ? q.domain()->name() : "Q"}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw Error("ParseError", path + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

}  // namespace coideal
