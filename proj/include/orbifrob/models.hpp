#pragma once

#include "orbifrob/frobenius.hpp"

namespace orbifrob::models {

/// The ground field: basis {1}, eta(1,1) = 1.
FrobeniusAlgebra ground_field();
/// Q[x]/(x^2) with deg x = 2 and eta(1,x) = 1.
FrobeniusAlgebra dual_numbers();
/// Cohomology model of a surface: basis {1,a,b,t}, degrees 0,2,2,4,
/// ab = ba = t, eta(1,t) = eta(a,b) = 1.
FrobeniusAlgebra surface();

}  // namespace orbifrob::models
