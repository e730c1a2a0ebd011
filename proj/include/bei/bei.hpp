#pragma once

#include "bei/classify.hpp"
#include "bei/error.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/log.hpp"
#include "bei/monomial.hpp"
#include "bei/monres.hpp"
#include "bei/oracle.hpp"
#include "bei/primes.hpp"
