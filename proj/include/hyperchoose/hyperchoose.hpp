#pragma once

#include "hyperchoose/bits.hpp"
#include "hyperchoose/hypergraph.hpp"
#include "hyperchoose/lists.hpp"
#include "hyperchoose/coloring.hpp"
#include "hyperchoose/canonical.hpp"
#include "hyperchoose/choosability.hpp"
#include "hyperchoose/io.hpp"
