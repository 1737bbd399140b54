#ifndef P3X_VERIFY_HPP
#define P3X_VERIFY_HPP

#include <p3x/verify/config.hpp>
#include <p3x/verify/data.hpp>
#include <p3x/verify/registry.hpp>
#include <p3x/verify/report.hpp>

#endif  // P3X_VERIFY_HPP
