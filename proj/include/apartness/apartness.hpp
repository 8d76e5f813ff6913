#pragma once

#include "apartness/axioms.hpp"
#include "apartness/constructors.hpp"
#include "apartness/harness.hpp"
#include "apartness/io.hpp"
#include "apartness/matrix.hpp"
#include "apartness/morphisms.hpp"
#include "apartness/nets.hpp"
#include "apartness/properties.hpp"
#include "apartness/rational.hpp"
#include "apartness/raw.hpp"
#include "apartness/search.hpp"
#include "apartness/space.hpp"
#include "apartness/subset.hpp"
#include "apartness/topology.hpp"
