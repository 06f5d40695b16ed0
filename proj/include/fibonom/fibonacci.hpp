#pragma once

#include "fibonom/numbers.hpp"

namespace fibonom {

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}. Memoized for the process
// lifetime; safe to call from concurrent verification workers.
Int fib(unsigned long n);

}  // namespace fibonom
