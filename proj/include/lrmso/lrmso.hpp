#pragma once

// Umbrella header: the whole library.

#include "lrmso/compile.hpp"
#include "lrmso/errors.hpp"
#include "lrmso/eval.hpp"
#include "lrmso/flip.hpp"
#include "lrmso/generators.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/hgraph.hpp"
#include "lrmso/isolating.hpp"
#include "lrmso/logic/ast.hpp"
#include "lrmso/logic/parser.hpp"
#include "lrmso/logic/printer.hpp"
#include "lrmso/logic/validate.hpp"
#include "lrmso/lowrank.hpp"
#include "lrmso/rank.hpp"
#include "lrmso/scc.hpp"
#include "lrmso/seeds.hpp"
#include "lrmso/separation.hpp"
#include "lrmso/vc.hpp"
#include "lrmso/vertex_set.hpp"
