#pragma once

#include "grouprings/algebra.hpp"
#include "grouprings/cache.hpp"
#include "grouprings/catalog.hpp"
#include "grouprings/cayley.hpp"
#include "grouprings/dsl.hpp"
#include "grouprings/families.hpp"
#include "grouprings/gpmn_solver.hpp"
#include "grouprings/hilbert.hpp"
#include "grouprings/iso.hpp"
#include "grouprings/ndlab.hpp"
#include "grouprings/pc.hpp"
#include "grouprings/report.hpp"
#include "grouprings/shoda.hpp"
#include "grouprings/sl2z.hpp"
#include "grouprings/structure.hpp"
