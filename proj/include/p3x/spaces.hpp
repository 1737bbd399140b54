#ifndef P3X_SPACES_HPP
#define P3X_SPACES_HPP

#include <p3x/spaces/maps.hpp>
#include <p3x/spaces/quartic.hpp>
#include <p3x/spaces/ring.hpp>
#include <p3x/spaces/space.hpp>
#include <p3x/spaces/subquotient.hpp>

#endif  // P3X_SPACES_HPP
