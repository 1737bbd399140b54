#ifndef P3X_CONSTRUCTIONS_HPP
#define P3X_CONSTRUCTIONS_HPP

#include <p3x/constructions/linear.hpp>
#include <p3x/constructions/surface.hpp>
#include <p3x/constructions/tables.hpp>

#endif  // P3X_CONSTRUCTIONS_HPP
