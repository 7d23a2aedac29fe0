#pragma once

#include "tdc/graph.hpp"

namespace tdc {

// Exhaustive chi_d^t by enumerating all set partitions (restricted growth
// strings) and filtering through is_tdc. Shares no search code with
// tdc_number. Order cap 10.
int tdc_number_bruteforce(const Graph& g);

// Exhaustive gamma_t by subset enumeration in increasing size. Order cap 16.
int gamma_t_bruteforce(const Graph& g);

}  // namespace tdc
