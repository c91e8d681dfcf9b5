// invco - cosets of closed inverse subsemigroups
//
// Includes the whole library.

#ifndef INVCO_INVCO_HPP_
#define INVCO_INVCO_HPP_

#include "action.hpp"
#include "automaton.hpp"
#include "builtins.hpp"
#include "closure.hpp"
#include "cosets.hpp"
#include "element_set.hpp"
#include "exception.hpp"
#include "f2ab.hpp"
#include "families.hpp"
#include "munn.hpp"
#include "semigroup.hpp"
#include "semigroup_json.hpp"
#include "worked_examples.hpp"

#endif  // INVCO_INVCO_HPP_
