#pragma once

#include "tin/bounds.hpp"
#include "tin/chordal.hpp"
#include "tin/decomposition.hpp"
#include "tin/error.hpp"
#include "tin/generators.hpp"
#include "tin/graph.hpp"
#include "tin/io.hpp"
#include "tin/mwis.hpp"
#include "tin/nice.hpp"
#include "tin/oracle.hpp"
#include "tin/packing.hpp"
#include "tin/rational.hpp"
#include "tin/vertex_set.hpp"
