#ifndef GLAB_GLAB_HPP_
#define GLAB_GLAB_HPP_

#include "analysis.hpp"
#include "bitset.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "indexed_group.hpp"
#include "lattice.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "replay.hpp"
#include "structure.hpp"
#include "suite.hpp"
#include "verify.hpp"
#include "xclass.hpp"
#include "xmax.hpp"

#endif  // GLAB_GLAB_HPP_
