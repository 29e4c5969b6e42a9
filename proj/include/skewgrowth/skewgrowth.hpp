#ifndef SKEWGROWTH_SKEWGROWTH_HPP_
#define SKEWGROWTH_SKEWGROWTH_HPP_

#include "builtins.hpp"
#include "checks.hpp"
#include "degree_key.hpp"
#include "dirichlet.hpp"
#include "divposet.hpp"
#include "errors.hpp"
#include "families_mp.hpp"
#include "monoid_model.hpp"
#include "presentation.hpp"
#include "towers.hpp"

#endif  // SKEWGROWTH_SKEWGROWTH_HPP_
