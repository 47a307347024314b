#ifndef KNOTSURG_KNOTSURG_HPP
#define KNOTSURG_KNOTSURG_HPP

#include "knotsurg/error.hpp"
#include "knotsurg/laurent.hpp"
#include "knotsurg/cyclotomic.hpp"
#include "knotsurg/knot.hpp"
#include "knotsurg/surgery.hpp"
#include "knotsurg/obstruction.hpp"

#endif
