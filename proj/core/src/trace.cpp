#include "anthill/trace.hpp"

#include <stdexcept>

#include "anthill/format.hpp"

namespace anthill {

void ConvergenceTrace::validate() const {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].iteration <= entries[i - 1].iteration)
      throw std::invalid_argument("trace iterations must strictly increase");
    if (entries[i].elite_fitness > entries[i - 1].elite_fitness)
      throw std::invalid_argument("trace elite fitness must never rise");
  }
}

std::string format_elite_log_line(int iteration, double elite_fitness) {
  return "At iteration " + std::to_string(iteration) +
         "\tthe elite fitness is " + format_double(elite_fitness);
}

std::string format_iteration_log_line(int iteration, double fitness) {
  return "Iteration# " + std::to_string(iteration) + "\t" +
         format_double(fitness);
}

void write_elite_log(std::ostream& os, const ConvergenceTrace& trace,
                     int stride) {
  if (stride < 1) throw std::invalid_argument("log stride must be positive");
  for (const auto& e : trace.entries)
    if (e.iteration % stride == 0)
      os << format_elite_log_line(e.iteration, e.elite_fitness) << '\n';
}

void write_iteration_log(std::ostream& os, const ConvergenceTrace& trace) {
  for (const auto& e : trace.entries)
    os << format_iteration_log_line(e.iteration, e.elite_fitness) << '\n';
}

}  // namespace anthill
