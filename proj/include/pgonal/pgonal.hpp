#ifndef PGONAL_PGONAL_HPP
#define PGONAL_PGONAL_HPP

#include "cocycle.hpp"
#include "conic.hpp"
#include "curve.hpp"
#include "descent.hpp"
#include "errors.hpp"
#include "gallery.hpp"
#include "intarith.hpp"
#include "linalg.hpp"
#include "normeq.hpp"
#include "numberfield.hpp"
#include "polynomial.hpp"
#include "projective.hpp"
#include "quadratic.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "ternary.hpp"
#include "weighted.hpp"

#endif
