#pragma once

#include "chaintopo/error.hpp"
#include "chaintopo/element_set.hpp"
#include "chaintopo/poset.hpp"
#include "chaintopo/topology.hpp"
#include "chaintopo/chain_catalog.hpp"
#include "chaintopo/order_relations.hpp"
#include "chaintopo/convexity.hpp"
#include "chaintopo/separation.hpp"
#include "chaintopo/io.hpp"
#include "chaintopo/search.hpp"
#include "chaintopo/suite.hpp"
