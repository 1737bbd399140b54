#ifndef P3X_MUKAI_HPP
#define P3X_MUKAI_HPP

#include <p3x/mukai/mukai.hpp>

#endif  // P3X_MUKAI_HPP
