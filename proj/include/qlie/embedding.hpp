#pragma once

#include "qlie/ncpoly.hpp"

namespace qlie {

// x0^{k_1-1} x1 ... x0^{k_d-1} x1 x0^n -> y_{k_1}...y_{k_d} if n = 0, else 0.
NcPoly pi_y(const NcPoly& p);

// Letterwise relabeling x_{s_1}...x_{s_k} -> b_{s_1}...b_{s_k}.
NcPoly theta_x(const NcPoly& p);

// Relabeling with reversal: y_{k_1}...y_{k_d} -> b_{k_d}...b_{k_1}.
NcPoly theta_y(const NcPoly& p);

// theta = theta_x + theta_y . pi_y, a linear map Q<X> -> Q<B>.
NcPoly theta(const NcPoly& p);

}  // namespace qlie
