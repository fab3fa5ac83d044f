#ifndef CACTUSVINE_CACTUSVINE_HPP
#define CACTUSVINE_CACTUSVINE_HPP

#include "cactusvine/cactus.hpp"
#include "cactusvine/comparable.hpp"
#include "cactusvine/dyn_forest.hpp"
#include "cactusvine/error.hpp"
#include "cactusvine/graph.hpp"
#include "cactusvine/incomparable.hpp"
#include "cactusvine/io.hpp"
#include "cactusvine/labels.hpp"
#include "cactusvine/oracle.hpp"
#include "cactusvine/pipeline.hpp"
#include "cactusvine/respect1.hpp"
#include "cactusvine/rooted_tree.hpp"
#include "cactusvine/solver.hpp"
#include "cactusvine/tree_context.hpp"
#include "cactusvine/tree_packing.hpp"
#include "cactusvine/verify.hpp"

#endif  // CACTUSVINE_CACTUSVINE_HPP
