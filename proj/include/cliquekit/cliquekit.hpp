#ifndef CLIQUEKIT_CLIQUEKIT_HPP
#define CLIQUEKIT_CLIQUEKIT_HPP

#include "cliquekit/bitset.hpp"
#include "cliquekit/clique_stream.hpp"
#include "cliquekit/correspondence.hpp"
#include "cliquekit/graph.hpp"
#include "cliquekit/io.hpp"
#include "cliquekit/isomorphism.hpp"
#include "cliquekit/report.hpp"
#include "cliquekit/search.hpp"

#endif
