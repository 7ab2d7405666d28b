/// @file rankmetric.hpp
/// @brief Convenience umbrella include for the whole library.

#ifndef RANKMETRIC_RANKMETRIC_HPP
#define RANKMETRIC_RANKMETRIC_HPP

#include "rankmetric/adversary.hpp"
#include "rankmetric/codes.hpp"
#include "rankmetric/constructions.hpp"
#include "rankmetric/galois.hpp"
#include "rankmetric/guard.hpp"
#include "rankmetric/io.hpp"
#include "rankmetric/linearized.hpp"
#include "rankmetric/oracle.hpp"
#include "rankmetric/selftest.hpp"

#endif  // RANKMETRIC_RANKMETRIC_HPP
