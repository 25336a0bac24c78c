#include <fstream>
#include <map>
#include <sstream>

#include "wsurf/ode_catalog.hpp"

namespace wsurf {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

DomainSpec parse_domain(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "domain needs a 'polar:' or 'cartesian:' prefix");
    const std::string kind = trim(text.substr(0, colon));
    const auto parts = split(text.substr(colon + 1), ',');
    if (parts.size() < 4) throw Error(ErrorCode::ParseError, "domain needs four numbers");
    DomainSpec d;
    if (kind == "polar") d.kind = DomainSpec::Kind::Polar;
    else if (kind == "cartesian") d.kind = DomainSpec::Kind::Cartesian;
    else throw Error(ErrorCode::ParseError, "unknown domain kind '" + kind + "'");
    double v[4];
    for (int i = 0; i < 4; ++i) v[i] = parse_complex(parts[i]).real();
    d.a0 = v[0], d.a1 = v[1], d.b0 = v[2], d.b1 = v[3];
    return d;
}

} // namespace

ODEPtr parse_user_ode(const std::string& text, const ParamMap& overrides) {
    std::map<std::string, std::string> kv;
    std::vector<std::string> cut_lines;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": empty key");
        if (key == "cut") cut_lines.push_back(value);
        else kv[key] = value;
    }

    LinearODE ode;
    ode.id = kv.count("id") ? kv["id"] : "user";
    ode.title = "user-defined";
    for (const auto& [k, v] : kv) {
        if (k.rfind("param.", 0) == 0) {
            const std::string name = k.substr(6);
            ode.params[name] = parse_complex(v);
            ode.schema.push_back({name, ode.params[name], ""});
        }
    }
    for (const auto& [k, v] : overrides) {
        if (!ode.params.count(k)) throw Error(ErrorCode::InvalidArgument, "user equation has no parameter '" + k + "'");
        ode.params[k] = v;
    }
    for (const char* key : {"p", "q", "r"})
        if (!kv.count(key)) throw Error(ErrorCode::ParseError, std::string("missing coefficient '") + key + "'");
    ode.p = Expression::parse(kv["p"], ode.params);
    ode.q = Expression::parse(kv["q"], ode.params);
    ode.r = Expression::parse(kv["r"], ode.params);
    ode.base_point = kv.count("base_point") ? parse_complex(kv["base_point"]) : cplx(0.0);
    ode.default_xi0 = kv.count("xi0") ? parse_complex(kv["xi0"]) : ode.base_point;
    if (kv.count("singularities"))
        for (const auto& s : split(kv["singularities"], ',')) ode.singularities.push_back(parse_complex(s));
    for (const auto& c : cut_lines) {
        std::istringstream cs(c);
        std::string anchor, dir;
        if (!(cs >> anchor >> dir)) throw Error(ErrorCode::ParseError, "cut needs an anchor and a direction");
        const cplx d = parse_complex(dir);
        if (std::abs(d) == 0.0) throw Error(ErrorCode::ParseError, "cut direction must be nonzero");
        ode.cuts.push_back({parse_complex(anchor), d / std::abs(d)});
    }
    for (cplx s : ode.singularities) {
        if (std::abs(s - ode.base_point) == 0.0)
            throw Error(ErrorCode::InvalidArgument, "base point coincides with a singularity");
        bool has_cut = false;
        for (const auto& c : ode.cuts) has_cut = has_cut || std::abs(c.anchor - s) < 1e-12;
        if (!has_cut) ode.cuts.push_back({s, (s - ode.base_point) / std::abs(s - ode.base_point)});
    }
    ode.default_domain = kv.count("domain") ? parse_domain(kv["domain"]) : DomainSpec{DomainSpec::Kind::Cartesian, -1, 1, -1, 1};
    return std::make_shared<const LinearODE>(std::move(ode));
}

ODEPtr load_user_ode(const std::string& path, const ParamMap& overrides) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_user_ode(ss.str(), overrides);
}

} // namespace wsurf
