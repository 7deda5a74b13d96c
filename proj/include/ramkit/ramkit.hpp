#pragma once

#include "ramkit/adversarial/adversary_io.hpp"
#include "ramkit/adversarial/avoidance.hpp"
#include "ramkit/adversarial/bad_set.hpp"
#include "ramkit/adversarial/measure.hpp"
#include "ramkit/adversarial/measure_build.hpp"
#include "ramkit/adversarial/priority.hpp"
#include "ramkit/adversarial/subset_code.hpp"
#include "ramkit/core/dyadic.hpp"
#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"
#include "ramkit/core/tree_io.hpp"
#include "ramkit/core/word.hpp"
#include "ramkit/gen/random.hpp"
#include "ramkit/graph/clique.hpp"
#include "ramkit/graph/coloring_search.hpp"
#include "ramkit/graph/coloring_tree.hpp"
#include "ramkit/graph/graph.hpp"
#include "ramkit/graph/graph_io.hpp"
#include "ramkit/graph/homogeneity.hpp"
#include "ramkit/graph/localize_graph.hpp"
#include "ramkit/graph/odd_path.hpp"
#include "ramkit/reductions/chain_code.hpp"
#include "ramkit/reductions/coloring_localize.hpp"
#include "ramkit/reductions/fixed_color.hpp"
#include "ramkit/reductions/kary.hpp"
#include "ramkit/reductions/length_lex.hpp"
#include "ramkit/reductions/localize.hpp"
#include "ramkit/reductions/packed.hpp"
#include "ramkit/reductions/tournament.hpp"
#include "ramkit/sat/bridge.hpp"
#include "ramkit/sat/dimacs.hpp"
#include "ramkit/sat/formula.hpp"
#include "ramkit/widgets/compiler.hpp"
#include "ramkit/widgets/gadget.hpp"
#include "ramkit/widgets/lemmas.hpp"
#include "ramkit/widgets/widgets.hpp"
