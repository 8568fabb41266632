#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "nckit/grid.hpp"
#include "nckit/planewave.hpp"
#include "nckit/star.hpp"

namespace nckit {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Plain key/value text with [section] headers; '#' starts a comment.
//
//   [theta]
//   t12 = t
//   t23 = 1/2*t^2
//
//   [planewave]
//   omega = 3
//   k = 1 2 2
//   p = 0 2 -1 0
//   profile = 0 1 1      # ascending coefficients in u, or "cos"
//   amplitude = 1
//
//   [grid]
//   n = 256
//   box_length = 100.53096491487338
//   theta = 1
class ConfigFile {
public:
    static ConfigFile parse(std::istream& is);
    static ConfigFile parse_string(const std::string& text);
    static ConfigFile load(const std::string& path);

    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    bool has_section(const std::string& section) const { return sections_.count(section) > 0; }
    const std::map<std::string, std::map<std::string, std::string>>& sections() const { return sections_; }

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

// Three upper-triangle entries as polynomial strings in t.
struct ThetaConfig {
    std::string t12 = "0";
    std::string t13 = "0";
    std::string t23 = "0";

    ThetaProfile profile() const;
    static ThetaConfig from(const ConfigFile& cfg);
};

PlaneWaveSpec planewave_spec_from(const ConfigFile& cfg);

struct GridParams {
    int n = kDefaultGridSize;
    double box_length = kDefaultBoxLength;
    double theta = 1.0;

    static GridParams from(const ConfigFile& cfg);
};

}  // namespace nckit
