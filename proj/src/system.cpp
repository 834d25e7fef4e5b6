#include "hqc/system.hpp"

#include <stdexcept>

namespace hqc {

namespace {

constexpr const char* kOneQubitNames[4] = {"theta1", "theta2", "phi1", "phi2"};
constexpr const char* kTwoQubitNames[9] = {"theta1_a", "theta2_a", "phi1_a", "phi2_a",
                                           "theta1_b", "theta2_b", "phi1_b", "phi2_b",
                                           "xi"};

}  // namespace

std::string_view coordinate_name(System s, int coordinate) {
  if (coordinate < 0 || coordinate >= coord_count(s)) {
    throw std::out_of_range("coordinate index out of range");
  }
  return s == System::OneQubit ? kOneQubitNames[coordinate] : kTwoQubitNames[coordinate];
}

std::string_view system_name(System s) {
  return s == System::OneQubit ? "one-qubit" : "two-qubit";
}

}  // namespace hqc
