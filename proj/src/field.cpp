#include "debm/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace debm {

ScalarField::ScalarField(int dim_, std::array<int, 2> shape_, double h_,
                         std::array<double, 2> origin_)
    : dim(dim_), shape(shape_), h(h_), origin(origin_) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("ScalarField: dim must be 1 or 2");
    if (dim == 1) shape[1] = 1;
    if (shape[0] < 1 || shape[1] < 1) throw std::invalid_argument("ScalarField: empty shape");
    if (h <= 0.0) throw std::invalid_argument("ScalarField: h <= 0");
    values.assign(static_cast<size_t>(shape[0]) * shape[1], 0.0);
}

double ScalarField::radius(int i, int j) const {
    const double x = x_of(i);
    if (dim == 1) return std::abs(x);
    const double y = y_of(j);
    return std::sqrt(x * x + y * y);
}

bool ScalarField::is_boundary(int i, int j) const {
    if (i == 0 || i == shape[0] - 1) return true;
    return dim == 2 && (j == 0 || j == shape[1] - 1);
}

double ScalarField::max_value() const {
    double m = values.empty() ? 0.0 : values[0];
    for (double v : values) m = std::max(m, v);
    return m;
}

double ScalarField::min_value() const {
    double m = values.empty() ? 0.0 : values[0];
    for (double v : values) m = std::min(m, v);
    return m;
}

VectorField gradient(const ScalarField& f) {
    if (f.shape[0] < 3 || (f.dim == 2 && f.shape[1] < 3)) {
        throw std::invalid_argument("gradient: need at least 3 nodes per axis");
    }
    VectorField g;
    g.dim = f.dim;
    g.shape = f.shape;
    g.gx.assign(f.size(), 0.0);
    g.gy.assign(f.size(), 0.0);
    g.norm.assign(f.size(), 0.0);
    const int nx = f.shape[0], ny = f.shape[1];
    const double inv2h = 1.0 / (2.0 * f.h);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            double dx;
            if (i == 0) {
                dx = (-3.0 * f.at(0, j) + 4.0 * f.at(1, j) - f.at(2, j)) * inv2h;
            } else if (i == nx - 1) {
                dx = (3.0 * f.at(nx - 1, j) - 4.0 * f.at(nx - 2, j) + f.at(nx - 3, j)) * inv2h;
            } else {
                dx = (f.at(i + 1, j) - f.at(i - 1, j)) * inv2h;
            }
            double dy = 0.0;
            if (f.dim == 2) {
                if (j == 0) {
                    dy = (-3.0 * f.at(i, 0) + 4.0 * f.at(i, 1) - f.at(i, 2)) * inv2h;
                } else if (j == ny - 1) {
                    dy = (3.0 * f.at(i, ny - 1) - 4.0 * f.at(i, ny - 2) + f.at(i, ny - 3)) * inv2h;
                } else {
                    dy = (f.at(i, j + 1) - f.at(i, j - 1)) * inv2h;
                }
            }
            const size_t k = g.index(i, j);
            g.gx[k] = dx;
            g.gy[k] = dy;
            g.norm[k] = f.dim == 1 ? std::abs(dx) : std::sqrt(dx * dx + dy * dy);
        }
    }
    return g;
}

double DeGiorgiGeometry::radius(int n) const {
    return 2.0 * r * (1.0 - std::pow(2.0, -(n + 1)));
}

double DeGiorgiGeometry::mid_radius(int n) const {
    return 0.5 * (radius(n) + radius(n + 1));
}

double cutoff_eta(const DeGiorgiGeometry& geom, int n, const std::array<double, 2>& x, int dim) {
    const double ax = dim == 1 ? std::abs(x[0]) : std::sqrt(x[0] * x[0] + x[1] * x[1]);
    const double rn = geom.radius(n);
    const double rbar = geom.mid_radius(n);
    if (ax <= rn) return 0.0;
    if (ax >= rbar) return 1.0;
    return (ax - rn) / (rbar - rn);
}

double integrate(const ScalarField& f, const DeGiorgiGeometry& geom, int annulus_n) {
    const double cell = f.dim == 1 ? f.h : f.h * f.h;
    const double rn = annulus_n >= 0 ? geom.radius(annulus_n) : -1.0;
    double sum = 0.0;
    for (int j = 0; j < f.shape[1]; ++j) {
        for (int i = 0; i < f.shape[0]; ++i) {
            if (annulus_n >= 0 && f.radius(i, j) < rn) continue;
            sum += f.at(i, j);
        }
    }
    return sum * cell;
}

double integrate(const ScalarField& f) {
    return integrate(f, DeGiorgiGeometry{}, -1);
}

double support_radius(const ScalarField& f, double threshold) {
    double rad = 0.0;
    for (int j = 0; j < f.shape[1]; ++j) {
        for (int i = 0; i < f.shape[0]; ++i) {
            if (f.at(i, j) > threshold) rad = std::max(rad, f.radius(i, j));
        }
    }
    return rad;
}

namespace {
void put17(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}
}  // namespace

std::string field_to_csv(const ScalarField& f) {
    std::string out = "dim,shape_x,shape_y,h,origin_x,origin_y,time\n";
    out += std::to_string(f.dim) + "," + std::to_string(f.shape[0]) + "," +
           std::to_string(f.shape[1]) + ",";
    put17(out, f.h);
    out += ",";
    put17(out, f.origin[0]);
    out += ",";
    put17(out, f.origin[1]);
    out += ",";
    put17(out, f.time);
    out += "\ni,j,x,y,value\n";
    for (int j = 0; j < f.shape[1]; ++j) {
        for (int i = 0; i < f.shape[0]; ++i) {
            out += std::to_string(i) + "," + std::to_string(j) + ",";
            put17(out, f.x_of(i));
            out += ",";
            put17(out, f.dim == 2 ? f.y_of(j) : 0.0);
            out += ",";
            put17(out, f.at(i, j));
            out += "\n";
        }
    }
    return out;
}

ScalarField field_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("field csv: empty");
    if (!std::getline(in, line)) throw std::runtime_error("field csv: missing header row");
    ScalarField f;
    {
        std::istringstream ls(line);
        std::string tok;
        std::getline(ls, tok, ',');
        f.dim = std::stoi(tok);
        std::getline(ls, tok, ',');
        f.shape[0] = std::stoi(tok);
        std::getline(ls, tok, ',');
        f.shape[1] = std::stoi(tok);
        std::getline(ls, tok, ',');
        f.h = std::stod(tok);
        std::getline(ls, tok, ',');
        f.origin[0] = std::stod(tok);
        std::getline(ls, tok, ',');
        f.origin[1] = std::stod(tok);
        std::getline(ls, tok, ',');
        f.time = std::stod(tok);
    }
    if (!std::getline(in, line)) throw std::runtime_error("field csv: missing node header");
    f.values.assign(static_cast<size_t>(f.shape[0]) * f.shape[1], 0.0);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        std::getline(ls, tok, ',');
        const int i = std::stoi(tok);
        std::getline(ls, tok, ',');
        const int j = std::stoi(tok);
        std::getline(ls, tok, ',');  // x
        std::getline(ls, tok, ',');  // y
        std::getline(ls, tok, ',');
        f.values[f.index(i, j)] = std::stod(tok);
    }
    return f;
}

void write_field_csv(const ScalarField& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << field_to_csv(f);
}

ScalarField read_field_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return field_from_csv(ss.str());
}

}  // namespace debm
