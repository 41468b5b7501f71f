#ifndef DEBM_FIELD_HPP
#define DEBM_FIELD_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace debm {

// Nonnegative density on a uniform node grid (1D or 2D), node-centered cells
// of volume h^dim. Boundary nodes carry the Dirichlet value 0 when flagged.
struct ScalarField {
    int dim = 1;
    std::array<int, 2> shape = {0, 1};       // nodes per axis; shape[1] = 1 in 1D
    double h = 0.0;                          // spacing, uniform and equal per axis
    std::array<double, 2> origin = {0.0, 0.0};
    double time = 0.0;
    bool dirichlet_boundary = true;
    std::vector<double> values;

    ScalarField() = default;
    ScalarField(int dim_, std::array<int, 2> shape_, double h_, std::array<double, 2> origin_);

    size_t size() const { return values.size(); }
    size_t index(int i, int j = 0) const { return static_cast<size_t>(j) * shape[0] + i; }
    double& at(int i, int j = 0) { return values[index(i, j)]; }
    double at(int i, int j = 0) const { return values[index(i, j)]; }

    double x_of(int i) const { return origin[0] + h * i; }
    double y_of(int j) const { return origin[1] + h * j; }
    // |x| of a node, distance to the origin of the physical coordinates
    double radius(int i, int j = 0) const;
    bool is_boundary(int i, int j = 0) const;

    double max_value() const;
    double min_value() const;
};

// per-node gradient components and |grad u|
struct VectorField {
    int dim = 1;
    std::array<int, 2> shape = {0, 1};
    std::vector<double> gx, gy, norm;
    size_t index(int i, int j = 0) const { return static_cast<size_t>(j) * shape[0] + i; }
};

// Central differences at interior nodes, one-sided second-order at the
// boundary. Requires >= 3 nodes per axis.
VectorField gradient(const ScalarField& f);

// The nested annular domains Omega_n = Omega \ B_{r_n}(0) of the De Giorgi
// scheme, r_n = 2r(1 - 2^-(n+1)) increasing to 2r.
struct DeGiorgiGeometry {
    double r0 = 1.0;  // initial support radius R0
    double r = 2.5;   // base radius, r > 2*R0
    int n_max = 8;

    double radius(int n) const;      // r_n
    double mid_radius(int n) const;  // (r_n + r_{n+1})/2
};

// Cutoff eta_n: 0 inside B_{r_n}, 1 beyond the mid radius, linear radial ramp
// between. The ramp slope is 4*2^n/r, the minimum the 0/1 constraints allow.
double cutoff_eta(const DeGiorgiGeometry& geom, int n, const std::array<double, 2>& x, int dim);

// Midpoint-rule integral over the nodes of Omega_n (annulus_n >= 0) or the
// whole grid (annulus_n < 0). A node belongs to Omega_n when |x| >= r_n.
double integrate(const ScalarField& f, const DeGiorgiGeometry& geom, int annulus_n);
double integrate(const ScalarField& f);

// Largest |x| over nodes with f > threshold; 0 when none.
double support_radius(const ScalarField& f, double threshold);

// CSV snapshot: header row (dim, shape, h, origin, time), one node per row.
// 17 significant digits so that write/read round-trips bit-exactly.
std::string field_to_csv(const ScalarField& f);
ScalarField field_from_csv(const std::string& csv);
void write_field_csv(const ScalarField& f, const std::string& path);
ScalarField read_field_csv(const std::string& path);

}  // namespace debm

#endif
