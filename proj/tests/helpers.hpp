#ifndef DBT_TEST_HELPERS_HPP
#define DBT_TEST_HELPERS_HPP

#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace dbt::testing {

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 8, tol);
}

} // namespace dbt::testing

#endif
