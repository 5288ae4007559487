#include "io/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace bo2d {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

const std::set<std::string> kKnownKeys = {
    "model", "transverse_sign", "nx", "ny", "Lx", "Ly", "dt", "T", "dealias",
    "nonlinearity", "record_every", "checkpoint_every", "ic", "ic_amplitude",
    "ic_sigma_x", "ic_sigma_y", "ic_center_x", "ic_center_y", "ic_mode_m", "ic_mode_n",
    "ic_seed", "ic_band_m", "ic_band_n", "ic_path", "probes", "moment_etas", "norm_s",
    "weight_r1", "weight_r2", "output_dir"};

const std::vector<std::string> kRequiredKeys = {"model", "nx", "ny", "Lx", "Ly",
                                                "dt", "T", "ic"};

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "config: key '" + key + "' has a malformed number '" + v + "'");
    }
}

long long parse_int(const std::string& key, const std::string& v) {
    long long out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        fail(ErrorCode::ParseError, "config: key '" + key + "' has a malformed integer '" + v + "'");
    return out;
}

std::vector<std::pair<int, int>> parse_probes(const std::string& v) {
    // "m,n; m,n; ..."
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos)
            fail(ErrorCode::ParseError, "config: probe entry '" + item + "' needs m,n");
        out.emplace_back(static_cast<int>(parse_int("probes", trim(item.substr(0, comma)))),
                         static_cast<int>(parse_int("probes", trim(item.substr(comma + 1)))));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& v) {
    std::vector<int> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(static_cast<int>(parse_int(key, item)));
    }
    return out;
}

void range_check(const RunConfig& cfg) {
    auto bad = [](const std::string& key) {
        fail(ErrorCode::RangeError, "config: key '" + key + "' is out of range");
    };
    if (cfg.nx < 4 || cfg.nx % 2 != 0) bad("nx");
    if (cfg.ny < 4 || cfg.ny % 2 != 0) bad("ny");
    if (!(cfg.Lx > 0.0) || !std::isfinite(cfg.Lx)) bad("Lx");
    if (!(cfg.Ly > 0.0) || !std::isfinite(cfg.Ly)) bad("Ly");
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) bad("dt");
    if (!(cfg.T >= 0.0) || !std::isfinite(cfg.T)) bad("T");
    if (cfg.record_every < 1) bad("record_every");
    if (cfg.checkpoint_every < 0) bad("checkpoint_every");
    if (!(cfg.ic.sigma_x > 0.0)) bad("ic_sigma_x");
    if (!(cfg.ic.sigma_y > 0.0)) bad("ic_sigma_y");
    if (cfg.ic.band_m < 1 || cfg.ic.band_m >= cfg.nx / 2) bad("ic_band_m");
    if (cfg.ic.band_n < 1 || cfg.ic.band_n >= cfg.ny / 2) bad("ic_band_n");
    if (cfg.ic.kind == IcKind::Checkpoint && cfg.ic.path.empty()) bad("ic_path");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::ParseError,
                 "config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.count(key))
            fail(ErrorCode::UnknownKey,
                 "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (seen.count(key))
            fail(ErrorCode::ParseError,
                 "config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        seen.insert(key);

        if (key == "model") {
            if (value == "bo2d") cfg.model = Model::BO2D;
            else if (value == "shrira") cfg.model = Model::Shrira;
            else fail(ErrorCode::RangeError, "config: key 'model' must be bo2d or shrira");
        } else if (key == "transverse_sign") {
            if (value == "minus") cfg.transverse_sign = TransverseSign::Minus;
            else if (value == "plus") cfg.transverse_sign = TransverseSign::Plus;
            else fail(ErrorCode::RangeError, "config: key 'transverse_sign' must be minus or plus");
        } else if (key == "nx") cfg.nx = static_cast<int>(parse_int(key, value));
        else if (key == "ny") cfg.ny = static_cast<int>(parse_int(key, value));
        else if (key == "Lx") cfg.Lx = parse_double(key, value);
        else if (key == "Ly") cfg.Ly = parse_double(key, value);
        else if (key == "dt") cfg.dt = parse_double(key, value);
        else if (key == "T") cfg.T = parse_double(key, value);
        else if (key == "dealias") {
            if (value == "two_thirds") cfg.dealias = Dealias::TwoThirds;
            else if (value == "none") cfg.dealias = Dealias::None;
            else fail(ErrorCode::RangeError, "config: key 'dealias' must be two_thirds or none");
        } else if (key == "nonlinearity") {
            if (value == "on") cfg.nonlinearity = true;
            else if (value == "off") cfg.nonlinearity = false;
            else fail(ErrorCode::RangeError, "config: key 'nonlinearity' must be on or off");
        } else if (key == "record_every") cfg.record_every = static_cast<int>(parse_int(key, value));
        else if (key == "checkpoint_every") cfg.checkpoint_every = static_cast<int>(parse_int(key, value));
        else if (key == "ic") {
            if (value == "gaussian") cfg.ic.kind = IcKind::Gaussian;
            else if (value == "dx_gaussian") cfg.ic.kind = IcKind::DxGaussian;
            else if (value == "cos_product") cfg.ic.kind = IcKind::CosProduct;
            else if (value == "random_band") cfg.ic.kind = IcKind::RandomBand;
            else if (value == "checkpoint") cfg.ic.kind = IcKind::Checkpoint;
            else fail(ErrorCode::RangeError, "config: key 'ic' names an unknown initial condition");
        } else if (key == "ic_amplitude") cfg.ic.amplitude = parse_double(key, value);
        else if (key == "ic_sigma_x") cfg.ic.sigma_x = parse_double(key, value);
        else if (key == "ic_sigma_y") cfg.ic.sigma_y = parse_double(key, value);
        else if (key == "ic_center_x") cfg.ic.center_x = parse_double(key, value);
        else if (key == "ic_center_y") cfg.ic.center_y = parse_double(key, value);
        else if (key == "ic_mode_m") cfg.ic.mode_m = static_cast<int>(parse_int(key, value));
        else if (key == "ic_mode_n") cfg.ic.mode_n = static_cast<int>(parse_int(key, value));
        else if (key == "ic_seed") cfg.ic.seed = static_cast<std::uint64_t>(parse_int(key, value));
        else if (key == "ic_band_m") cfg.ic.band_m = static_cast<int>(parse_int(key, value));
        else if (key == "ic_band_n") cfg.ic.band_n = static_cast<int>(parse_int(key, value));
        else if (key == "ic_path") cfg.ic.path = value;
        else if (key == "probes") cfg.probes = parse_probes(value);
        else if (key == "moment_etas") cfg.moment_etas = parse_int_list(key, value);
        else if (key == "norm_s") cfg.norm_s = parse_double(key, value);
        else if (key == "weight_r1") cfg.weight_r1 = parse_double(key, value);
        else if (key == "weight_r2") cfg.weight_r2 = parse_double(key, value);
        else if (key == "output_dir") cfg.output_dir = value;
    }

    std::string missing;
    for (const auto& key : kRequiredKeys)
        if (!seen.count(key)) missing += missing.empty() ? key : ", " + key;
    if (!missing.empty())
        fail(ErrorCode::MissingKey, "config: missing required key(s): " + missing);

    range_check(cfg);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    out << "model = " << (cfg.model == Model::BO2D ? "bo2d" : "shrira") << "\n";
    out << "transverse_sign = "
        << (cfg.transverse_sign == TransverseSign::Minus ? "minus" : "plus") << "\n";
    out << "nx = " << cfg.nx << "\n";
    out << "ny = " << cfg.ny << "\n";
    out << "Lx = " << num(cfg.Lx) << "\n";
    out << "Ly = " << num(cfg.Ly) << "\n";
    out << "dt = " << num(cfg.dt) << "\n";
    out << "T = " << num(cfg.T) << "\n";
    out << "dealias = " << (cfg.dealias == Dealias::TwoThirds ? "two_thirds" : "none") << "\n";
    out << "nonlinearity = " << (cfg.nonlinearity ? "on" : "off") << "\n";
    out << "record_every = " << cfg.record_every << "\n";
    out << "checkpoint_every = " << cfg.checkpoint_every << "\n";
    const char* ic_name = nullptr;
    switch (cfg.ic.kind) {
        case IcKind::Gaussian: ic_name = "gaussian"; break;
        case IcKind::DxGaussian: ic_name = "dx_gaussian"; break;
        case IcKind::CosProduct: ic_name = "cos_product"; break;
        case IcKind::RandomBand: ic_name = "random_band"; break;
        case IcKind::Checkpoint: ic_name = "checkpoint"; break;
    }
    out << "ic = " << ic_name << "\n";
    out << "ic_amplitude = " << num(cfg.ic.amplitude) << "\n";
    out << "ic_sigma_x = " << num(cfg.ic.sigma_x) << "\n";
    out << "ic_sigma_y = " << num(cfg.ic.sigma_y) << "\n";
    out << "ic_center_x = " << num(cfg.ic.center_x) << "\n";
    out << "ic_center_y = " << num(cfg.ic.center_y) << "\n";
    out << "ic_mode_m = " << cfg.ic.mode_m << "\n";
    out << "ic_mode_n = " << cfg.ic.mode_n << "\n";
    out << "ic_seed = " << cfg.ic.seed << "\n";
    out << "ic_band_m = " << cfg.ic.band_m << "\n";
    out << "ic_band_n = " << cfg.ic.band_n << "\n";
    if (!cfg.ic.path.empty()) out << "ic_path = " << cfg.ic.path << "\n";
    if (!cfg.probes.empty()) {
        out << "probes = ";
        for (std::size_t i = 0; i < cfg.probes.size(); ++i) {
            if (i) out << "; ";
            out << cfg.probes[i].first << "," << cfg.probes[i].second;
        }
        out << "\n";
    }
    if (!cfg.moment_etas.empty()) {
        out << "moment_etas = ";
        for (std::size_t i = 0; i < cfg.moment_etas.size(); ++i) {
            if (i) out << ",";
            out << cfg.moment_etas[i];
        }
        out << "\n";
    }
    out << "norm_s = " << num(cfg.norm_s) << "\n";
    out << "weight_r1 = " << num(cfg.weight_r1) << "\n";
    out << "weight_r2 = " << num(cfg.weight_r2) << "\n";
    out << "output_dir = " << cfg.output_dir << "\n";
    return out.str();
}

}  // namespace bo2d
