#ifndef AMSG_AMSG_HPP_
#define AMSG_AMSG_HPP_

#include "amsg/am.hpp"
#include "amsg/arith.hpp"
#include "amsg/charseq.hpp"
#include "amsg/construct.hpp"
#include "amsg/divisors.hpp"
#include "amsg/enumerate.hpp"
#include "amsg/error.hpp"
#include "amsg/gluing.hpp"
#include "amsg/semigroup.hpp"

#endif  // AMSG_AMSG_HPP_
