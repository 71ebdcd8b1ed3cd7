// Umbrella header.
#ifndef MOBP_MOBP_HPP
#define MOBP_MOBP_HPP

#include "archive.hpp"
#include "construct.hpp"
#include "experiment.hpp"
#include "instances.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "rng.hpp"

#endif  // MOBP_MOBP_HPP
