#include "radonlink/errors.hpp"

#include <sstream>

namespace radonlink {

GeneralPositionError::GeneralPositionError(std::vector<std::size_t> subset, const std::string& what)
    : Error(what), subset_(std::move(subset)) {}

std::string format_index_set(const std::vector<std::size_t>& indices) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k != 0) out << ", ";
    out << indices[k] + 1;
  }
  out << '}';
  return out.str();
}

}  // namespace radonlink
