#include "rankdiff/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace rankdiff {

std::string format_number(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << v;
    return os.str();
}

std::map<std::string, double> parse_config(std::istream& in) {
    std::map<std::string, double> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string{};
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw DomainError("config line " + std::to_string(lineno) + ": empty key or value");
        if (kv.count(key))
            throw DomainError("config line " + std::to_string(lineno) + ": duplicate key " + key);
        try {
            std::size_t used = 0;
            const double x = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            kv[key] = x;
        } catch (const std::exception&) {
            throw DomainError("config line " + std::to_string(lineno) + ": bad number '" + val +
                              "'");
        }
    }
    return kv;
}

std::map<std::string, double> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file: " + path);
    return parse_config(in);
}

namespace {

void write_row(std::ostream& out, std::initializer_list<double> vals) {
    bool first = true;
    for (double v : vals) {
        if (!first) out << ',';
        out << format_number(v);
        first = false;
    }
    out << '\n';
}

}  // namespace

void write_path_csv(std::ostream& out, const PathBundle& b) {
    out << "t,V1,V2,A,Lambda,Z,G,Y,M,N,X1,X2,B1,B2\n";
    for (std::size_t k = 0; k < b.G.size(); ++k)
        write_row(out, {b.G.time(k), b.brownian.V1[k], b.brownian.V2[k], b.regulators.A[k],
                        b.regulators.Lambda[k], b.Z[k], b.G[k], b.Y[k], b.M[k], b.N[k], b.X1[k],
                        b.X2[k], b.B1[k], b.B2[k]});
}

void write_degenerate_csv(std::ostream& out, const DegenerateBundle& b) {
    out << "t,V,Lambda,LY,R1,R2,Y,X1,X2\n";
    for (std::size_t k = 0; k < b.V.size(); ++k)
        write_row(out, {b.V.time(k), b.V[k], b.Lambda[k], b.LY[k], b.R1[k], b.R2[k], b.Y[k],
                        b.X1[k], b.X2[k]});
}

void write_histogram_csv(std::ostream& out, const Histogram2D& h) {
    out << "gap_lo,gap_hi,laggard_lo,laggard_hi,count\n";
    for (std::size_t i = 0; i + 1 < h.gap_edges.size(); ++i)
        for (std::size_t j = 0; j + 1 < h.laggard_edges.size(); ++j) {
            out << format_number(h.gap_edges[i]) << ',' << format_number(h.gap_edges[i + 1]) << ','
                << format_number(h.laggard_edges[j]) << ','
                << format_number(h.laggard_edges[j + 1]) << ',' << h.counts[i][j] << '\n';
        }
}

void write_density_grid_csv(std::ostream& out, const SumExpDensity& d, double upper,
                            std::size_t n) {
    out << "xi1,xi2,p\n";
    for (std::size_t i = 0; i <= n; ++i) {
        const double xi1 = upper * static_cast<double>(i) / static_cast<double>(n);
        for (std::size_t j = 0; j <= n; ++j) {
            const double xi2 = upper * static_cast<double>(j) / static_cast<double>(n);
            write_row(out, {xi1, xi2, d(xi1, xi2)});
        }
    }
}

void write_identity_csv(std::ostream& out, const IdentityReport& rep) {
    out << "name,value,reference,residual,tolerance,pass\n";
    for (const auto& e : rep.entries)
        out << e.name << ',' << format_number(e.value) << ',' << format_number(e.reference) << ','
            << format_number(e.residual) << ',' << format_number(e.tolerance) << ','
            << (e.pass ? 1 : 0) << '\n';
}

std::string make_manifest(const Scenario& s, const std::string& command, double wall_seconds) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["params"] = {{"g", s.params.g},       {"h", s.params.h}, {"rho", s.params.rho},
                   {"sigma", s.params.sigma}, {"x1", s.params.x1}, {"x2", s.params.x2}};
    j["grid"] = {{"horizon", s.horizon}, {"dt", s.dt}, {"burn_in", s.burn_in}};
    j["seeding"] = {{"base_seed", s.base_seed},
                    {"n_paths", s.n_paths},
                    {"path_seed_rule", "splitmix64(base_seed, path_index, stream_tag)"}};
    j["thresholds"] = {{"zero_tol", s.opt.zero_tol},
                       {"solver_tol", s.opt.solver_tol},
                       {"eps_corner", s.eps_corner},
                       {"lt_epsilon", s.lt_epsilon}};
    j["wall_seconds"] = wall_seconds;
    return j.dump(2) + "\n";
}

std::string error_record(const std::string& code, const std::string& module,
                         const std::string& message) {
    nlohmann::json j{{"code", code}, {"module", module}, {"message", message}};
    return j.dump() + "\n";
}

}  // namespace rankdiff
