#include "ohc/constants.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ohc {

namespace {
struct Field {
    const char* name;
    double ConstantsProfile::*ptr;
};
constexpr Field kFields[] = {
    {"nu", &ConstantsProfile::nu},     {"tau", &ConstantsProfile::tau},
    {"eps", &ConstantsProfile::eps},   {"eps1", &ConstantsProfile::eps1},
    {"eps2", &ConstantsProfile::eps2}, {"eps3", &ConstantsProfile::eps3},
    {"eps4", &ConstantsProfile::eps4}, {"eta1", &ConstantsProfile::eta1},
    {"eta2", &ConstantsProfile::eta2},
};
}  // namespace

std::vector<std::string> ConstantsProfile::chain_violations() const {
    const std::pair<const char*, double> chain[] = {
        {"eps", eps},   {"eps1", eps1}, {"eps2", eps2}, {"eta1", eta1},
        {"tau", tau},   {"eps3", eps3}, {"eps4", eps4}, {"eta2", eta2},
    };
    std::vector<std::string> bad;
    for (size_t i = 0; i + 1 < std::size(chain); ++i)
        if (chain[i].second > chain[i + 1].second)
            bad.push_back(std::string(chain[i].first) + " > " + chain[i + 1].first);
    return bad;
}

void ConstantsProfile::validate() const {
    for (const auto& f : kFields) {
        double v = this->*f.ptr;
        if (!(v > 0.0 && v < 1.0))
            throw std::invalid_argument(std::string("profile: ") + f.name +
                                        " outside (0,1)");
    }
    if (nu > tau) throw std::invalid_argument("profile: requires nu <= tau");
}

std::string ConstantsProfile::to_text() const {
    std::ostringstream os;
    for (const auto& f : kFields) os << f.name << "=" << this->*f.ptr << "\n";
    return os.str();
}

ConstantsProfile ConstantsProfile::from_text(const std::string& text) {
    ConstantsProfile p;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("profile: expected key=value, got '" + line + "'");
        std::string key = line.substr(0, eq);
        double value = std::stod(line.substr(eq + 1));
        bool known = false;
        for (const auto& f : kFields)
            if (key == f.name) {
                p.*f.ptr = value;
                known = true;
            }
        if (!known) throw std::invalid_argument("profile: unknown key '" + key + "'");
    }
    p.validate();
    return p;
}

ConstantsProfile ConstantsProfile::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

ConstantsProfile ConstantsProfile::cover_scale() {
    ConstantsProfile p;
    p.nu = 0.02;
    p.eps = 0.002;
    p.eps1 = 0.004;
    p.eps2 = 0.02;
    p.eta1 = 0.2;
    p.tau = 0.25;
    p.eps3 = 0.3;
    p.eps4 = 0.35;
    p.eta2 = 0.4;
    return p;
}

}  // namespace ohc
