#pragma once

#include <Eigen/Dense>

namespace symcomp {

using Real = double;
using Vec = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;
using Index = Eigen::Index;

// Lebesgue measure of the unit ball in R^dim (pi for dim=2, 4pi/3 for dim=3).
Real unit_ball_measure(int dim);

// Surface measure of the unit sphere, dim * omega_dim.
Real unit_sphere_area(int dim);

// Isoperimetric constant dim^2 * omega_dim^{-2/dim}.
Real isoperimetric_constant(int dim);

// Radius of the ball of given measure: (measure / omega_dim)^{1/dim}.
Real ball_radius_from_measure(Real measure, int dim);

}  // namespace symcomp
