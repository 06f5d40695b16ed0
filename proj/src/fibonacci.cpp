#include "fibonom/fibonacci.hpp"

#include <mutex>
#include <vector>

namespace fibonom {

Int fib(unsigned long n) {
  static std::mutex mu;
  static std::vector<Int> table{Int(0), Int(1)};
  std::scoped_lock lock(mu);
  while (table.size() <= n) {
    const std::size_t m = table.size();
    table.push_back(table[m - 1] + table[m - 2]);
  }
  return table[n];
}

}  // namespace fibonom
