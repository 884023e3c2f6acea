#include "lerchlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "lerchlab/errors.hpp"

namespace lerchlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    double x = 0.0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError("config: " + key + ": not a number: " + v);
    return x;
}

long to_long(const std::string& key, const std::string& v, long lo) {
    long x = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError("config: " + key + ": not an integer: " + v);
    if (x < lo) throw ConfigError("config: " + key + " must be at least " + std::to_string(lo));
    return x;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "off" || v == "0" || v == "no") return false;
    throw ConfigError("config: " + key + ": expected a boolean, got " + v);
}

}  // namespace

cplx parse_complex(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError("empty complex number");
    if (t.back() != 'i') return {to_double("complex", t), 0.0};
    const std::string body = t.substr(0, t.size() - 1);
    // The imaginary part starts at the last sign that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return to_double("complex", s[0] == '+' ? s.substr(1) : s);
    };
    if (split == std::string::npos) return {0.0, imag_of(body)};
    return {to_double("complex", body.substr(0, split)), imag_of(body.substr(split))};
}

const std::vector<std::string>& SuiteConfig::all_groups() {
    static const std::vector<std::string> g = {"special_fns", "functional_equations", "hecke_eigen",
                                               "commutators", "adjoint",              "characterization",
                                               "milnor_baseline", "zeta_operator"};
    return g;
}

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig c;
    c.groups = all_groups();
    return c;
}

SuiteConfig parse_config(const std::string& text) {
    SuiteConfig c = SuiteConfig::defaults();
    using Setter = std::function<void(const std::string&, const std::string&)>;
    auto integer = [](int& dst, long lo) {
        return Setter([&dst, lo](const std::string& k, const std::string& v) { dst = int(to_long(k, v, lo)); });
    };
    auto complex_list = [](std::vector<cplx>& dst) {
        return Setter([&dst](const std::string&, const std::string& v) {
            dst.clear();
            for (const auto& x : split_list(v)) dst.push_back(parse_complex(x));
        });
    };
    auto real_list = [](std::vector<double>& dst) {
        return Setter([&dst](const std::string& k, const std::string& v) {
            dst.clear();
            for (const auto& x : split_list(v)) dst.push_back(to_double(k, x));
        });
    };

    const std::map<std::string, Setter> setters = {
        {"seed", [&](auto& k, auto& v) { c.seed = std::uint64_t(to_long(k, v, 0)); }},
        {"groups",
         [&](auto&, auto& v) {
             c.groups = split_list(v);
             for (const auto& g : c.groups) {
                 const auto& all = SuiteConfig::all_groups();
                 if (std::find(all.begin(), all.end(), g) == all.end())
                     throw ConfigError("config: unknown group " + g);
             }
         }},
        {"tolerance_scale",
         [&](auto& k, auto& v) {
             c.tolerance_scale = to_double(k, v);
             if (c.tolerance_scale < 0.0) throw ConfigError("config: tolerance_scale must be non-negative");
         }},
        {"timing", [&](auto& k, auto& v) { c.timing = to_bool(k, v); }},
        {"special_samples", integer(c.special_samples, 1)},
        {"strip_samples", integer(c.strip_samples, 1)},
        {"fe_samples", integer(c.fe_samples, 1)},
        {"hecke_s", complex_list(c.hecke_s)},
        {"hecke_m_max", integer(c.hecke_m_max, 2)},
        {"hecke_points", integer(c.hecke_points, 1)},
        {"algebra_m_max", integer(c.algebra_m_max, 1)},
        {"algebra_points", integer(c.algebra_points, 1)},
        {"commutator_points", integer(c.commutator_points, 1)},
        {"stencil_h",
         [&](auto& k, auto& v) {
             c.stencil_h = to_double(k, v);
             if (!(c.stencil_h > 0.0)) throw ConfigError("config: stencil_h must be positive");
         }},
        {"diff_s", real_list(c.diff_s)},
        {"diff_points", integer(c.diff_points, 1)},
        {"adjoint_m_max", integer(c.adjoint_m_max, 1)},
        {"adjoint_trials", integer(c.adjoint_trials, 1)},
        {"grid_panels", integer(c.grid_panels, 1)},
        {"grid_points", integer(c.grid_points, 2)},
        {"eigen_s", complex_list(c.eigen_s)},
        {"char_s", real_list(c.char_s)},
        {"kubert_s", complex_list(c.kubert_s)},
        {"kubert_m_max", integer(c.kubert_m_max, 1)},
        {"zeta_operator_s", [&](auto& k, auto& v) { c.zeta_operator_s = to_double(k, v); }},
        {"zeta_operator_M", integer(c.zeta_operator_M, 1)},
        {"zeta_operator_points", integer(c.zeta_operator_points, 1)},
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError("config line " + std::to_string(lineno) + ": unknown key " + key);
        try {
            it->second(key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return c;
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

}  // namespace lerchlab
