#ifndef PARABOLIC_PARABOLIC_HPP
#define PARABOLIC_PARABOLIC_HPP

#include "parabolic/error.hpp"
#include "parabolic/rational.hpp"
#include "parabolic/roots.hpp"
#include "parabolic/dynkin.hpp"
#include "parabolic/grading.hpp"
#include "parabolic/kostant.hpp"
#include "parabolic/cascade.hpp"
#include "parabolic/criteria.hpp"
#include "parabolic/chevalley.hpp"
#include "parabolic/polynomial.hpp"
#include "parabolic/flatjets.hpp"
#include "parabolic/serialize.hpp"
#include "parabolic/tables.hpp"
#include "parabolic/geometry_spec.hpp"

#endif // PARABOLIC_PARABOLIC_HPP
