#pragma once

#include "widecover/errors.hpp"
#include "widecover/partition.hpp"
#include "widecover/bipartite.hpp"
#include "widecover/hypergraph.hpp"
#include "widecover/latin.hpp"
#include "widecover/covers.hpp"
#include "widecover/profile.hpp"
#include "widecover/witness.hpp"
#include "widecover/serialize.hpp"
#include "widecover/harness.hpp"
