#ifndef P3X_EXACTLA_HPP
#define P3X_EXACTLA_HPP

#include <p3x/exactla/certify.hpp>
#include <p3x/exactla/elimination.hpp>
#include <p3x/exactla/modular.hpp>
#include <p3x/exactla/scalar.hpp>
#include <p3x/exactla/sparse_matrix.hpp>

#endif  // P3X_EXACTLA_HPP
