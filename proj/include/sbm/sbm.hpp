#ifndef SBM_SBM_HPP
#define SBM_SBM_HPP

// Umbrella header for the singular braid monoid toolkit.

#include "sbm/bkl.hpp"
#include "sbm/cli.hpp"
#include "sbm/conjugacy.hpp"
#include "sbm/errors.hpp"
#include "sbm/garside.hpp"
#include "sbm/rewrite.hpp"
#include "sbm/selfcheck.hpp"
#include "sbm/serialize.hpp"
#include "sbm/word.hpp"

#endif
