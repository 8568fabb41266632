#include "nckit/config.hpp"

#include <fstream>
#include <sstream>

#include "nckit/expr.hpp"

namespace nckit {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Rational> rationals(const std::string& text, const std::string& key) {
    std::istringstream ss(text);
    std::vector<Rational> out;
    std::string item;
    while (ss >> item) {
        try {
            out.push_back(parse_decimal_or_rational(item));
        } catch (const std::exception&) {
            throw ConfigError("bad number '" + item + "' for " + key);
        }
    }
    return out;
}

template <std::size_t N>
std::array<Rational, N> vector_of(const ConfigFile& cfg, const std::string& key) {
    const auto v = cfg.get("planewave", key);
    if (!v) throw ConfigError("planewave." + key + " is required");
    const auto r = rationals(*v, key);
    if (r.size() != N) throw ConfigError("planewave." + key + " needs " + std::to_string(N) + " numbers");
    std::array<Rational, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = r[i];
    return out;
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream& is) {
    ConfigFile cfg;
    std::string section;
    std::string raw;
    int line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            cfg.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        if (section.empty()) throw ConfigError("line " + std::to_string(line_no) + ": key outside a section");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        cfg.sections_[section][key] = trim(line.substr(eq + 1));
    }
    return cfg;
}

ConfigFile ConfigFile::parse_string(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
}

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open " + path);
    return parse(is);
}

std::optional<std::string> ConfigFile::get(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second;
}

ThetaProfile ThetaConfig::profile() const {
    try {
        return ThetaProfile(parse_t_polynomial(t12), parse_t_polynomial(t13), parse_t_polynomial(t23));
    } catch (const ParseError& e) {
        throw ConfigError(std::string("theta entry: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const GradingError& e) {
        throw ConfigError(e.what());
    }
}

ThetaConfig ThetaConfig::from(const ConfigFile& cfg) {
    ThetaConfig t;
    if (!cfg.has_section("theta")) throw ConfigError("missing [theta] section");
    for (const auto& [key, value] : cfg.sections().at("theta")) {
        if (key == "t12")
            t.t12 = value;
        else if (key == "t13")
            t.t13 = value;
        else if (key == "t23")
            t.t23 = value;
        else
            throw ConfigError("unknown theta key '" + key + "' (expected t12, t13, t23)");
    }
    t.profile();
    return t;
}

PlaneWaveSpec planewave_spec_from(const ConfigFile& cfg) {
    if (!cfg.has_section("planewave")) throw ConfigError("missing [planewave] section");
    PlaneWaveSpec s;
    const auto omega = cfg.get("planewave", "omega");
    if (!omega) throw ConfigError("planewave.omega is required");
    const auto w = rationals(*omega, "omega");
    if (w.size() != 1) throw ConfigError("planewave.omega needs one number");
    s.omega = w[0];
    s.k = vector_of<3>(cfg, "k");
    s.p = vector_of<4>(cfg, "p");
    const std::string profile = cfg.get("planewave", "profile").value_or("0 1");
    if (profile == "cos") {
        s.waveform = Waveform::cosine;
        if (auto a = cfg.get("planewave", "amplitude")) {
            const auto r = rationals(*a, "amplitude");
            if (r.size() != 1) throw ConfigError("planewave.amplitude needs one number");
            s.amplitude = r[0];
        }
    } else {
        s.profile = rationals(profile, "profile");
        if (static_cast<int>(s.profile.size()) - 1 > kMaxSymbolicProfileDegree)
            throw ConfigError("planewave.profile degree exceeds 8");
    }
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return s;
}

GridParams GridParams::from(const ConfigFile& cfg) {
    GridParams g;
    auto number = [&](const std::string& key) -> std::optional<double> {
        auto v = cfg.get("grid", key);
        if (!v) return std::nullopt;
        try {
            std::size_t used = 0;
            const double d = std::stod(*v, &used);
            if (used != v->size()) throw std::invalid_argument(key);
            return d;
        } catch (const std::exception&) {
            throw ConfigError("bad number for grid." + key);
        }
    };
    if (auto n = number("n")) g.n = static_cast<int>(*n);
    if (auto b = number("box_length")) g.box_length = *b;
    if (auto t = number("theta")) g.theta = *t;
    if (g.n < 2 || (g.n & (g.n - 1)) != 0) throw ConfigError("grid.n must be a power of two");
    if (!(g.box_length > 0)) throw ConfigError("grid.box_length must be positive");
    return g;
}

}  // namespace nckit
