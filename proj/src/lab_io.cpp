#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tfplasma/errors.hpp"
#include "tfplasma/lab.hpp"

namespace tfp {

namespace {

// Shortest-exact decimal is unnecessary; %.17g round-trips every double.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_row(const std::string& line, std::size_t expected,
                              const std::string& path) {
    std::vector<double> out;
    out.reserve(expected);
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("bad number in " + path + ": " + tok);
        }
    }
    if (out.size() != expected) {
        throw ConfigError("bad column count in " + path + ": got " +
                          std::to_string(out.size()) + ", want " + std::to_string(expected));
    }
    return out;
}

} // namespace

void write_snapshot(const Field& field, const PhysParams& params, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write snapshot: " + path);
    const bool two_d = field.grid.dim == 2;
    out << (two_d ? "x,y," : "x,")
        << "rho_i,vi_x,vi_y,vi_z,p_i,rho_e,ve_x,ve_y,ve_z,p_e,"
           "Bx,By,Bz,Ex,Ey,Ez,phi,psi\n";
    field.for_each_interior([&](const ConsState& u, int i, int j) {
        const PrimState q = cons_to_prim(u, params);
        out << fmt(field.grid.x_center(i));
        if (two_d) out << ',' << fmt(field.grid.y_center(j));
        const double row[] = {q.rho_i, q.v_i[0], q.v_i[1], q.v_i[2], q.p_i,
                              q.rho_e, q.v_e[0], q.v_e[1], q.v_e[2], q.p_e,
                              q.B[0], q.B[1], q.B[2], q.E[0], q.E[1], q.E[2],
                              q.phi, q.psi};
        for (double v : row) out << ',' << fmt(v);
        out << '\n';
    });
    if (!out) throw ConfigError("failed while writing snapshot: " + path);
}

Field read_snapshot(const std::string& path, const Grid& grid,
                    const std::array<BoundaryCondition, 4>& bc, const PhysParams& params) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open snapshot: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty snapshot: " + path);

    Field field(grid, bc);
    const std::size_t coords = grid.dim == 2 ? 2 : 1;
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            if (!std::getline(in, line)) {
                throw ConfigError("snapshot ended early: " + path);
            }
            const std::vector<double> row = parse_row(line, coords + 18, path);
            PrimState q{};
            std::size_t k = coords;
            q.rho_i = row[k++];
            q.v_i = {row[k], row[k + 1], row[k + 2]};
            k += 3;
            q.p_i = row[k++];
            q.rho_e = row[k++];
            q.v_e = {row[k], row[k + 1], row[k + 2]};
            k += 3;
            q.p_e = row[k++];
            q.B = {row[k], row[k + 1], row[k + 2]};
            k += 3;
            q.E = {row[k], row[k + 1], row[k + 2]};
            k += 3;
            q.phi = row[k++];
            q.psi = row[k++];
            field.at(i, j) = prim_to_cons(q, params);
        }
    }
    return field;
}

void write_series(const std::vector<SeriesRow>& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write series: " + path);
    out << "t,dt,e_i,e_e,e_m,mass_i,mass_e\n";
    for (const SeriesRow& r : series) {
        out << fmt(r.t) << ',' << fmt(r.dt) << ',' << fmt(r.e_i) << ',' << fmt(r.e_e)
            << ',' << fmt(r.e_m) << ',' << fmt(r.mass_i) << ',' << fmt(r.mass_e) << '\n';
    }
}

std::string sweep_csv_header(const std::string& key) {
    return key + ",steps,wall_seconds,final_l1_error,e_i,e_e,e_m,mass_i,mass_e";
}

std::string sweep_csv_row(double value, const RunReport& report) {
    std::string row = fmt(value) + ',' + std::to_string(report.steps_taken) + ',' +
                      fmt(report.wall_seconds) + ',';
    if (report.final_l1_error) row += fmt(*report.final_l1_error);
    const SeriesRow& last = report.series.back();
    row += ',' + fmt(last.e_i) + ',' + fmt(last.e_e) + ',' + fmt(last.e_m) + ',' +
           fmt(last.mass_i) + ',' + fmt(last.mass_e);
    return row;
}

} // namespace tfp
