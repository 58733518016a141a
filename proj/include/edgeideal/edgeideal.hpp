#pragma once

// Umbrella header: exact homological invariants of edge ideals of graphs
// and the structural recognizers built on them.

#include "edgeideal/betti.hpp"
#include "edgeideal/chordal.hpp"
#include "edgeideal/cliques.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/connectivity.hpp"
#include "edgeideal/decompose.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/hilbert.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/io.hpp"
#include "edgeideal/parallel.hpp"
#include "edgeideal/rank.hpp"
#include "edgeideal/recognition.hpp"
#include "edgeideal/report.hpp"
#include "edgeideal/scan.hpp"
#include "edgeideal/vertexset.hpp"
