#include "polyzeta/polynomial.hpp"

#include <sstream>

namespace polyzeta {

std::string scalar_traits<std::complex<double>>::to_string(const std::complex<double>& a) {
  std::ostringstream os;
  os.precision(17);
  if (a.imag() == 0.0) {
    os << a.real();
  } else {
    os << "(" << a.real() << (a.imag() >= 0 ? "+" : "") << a.imag() << "i)";
  }
  return os.str();
}

}  // namespace polyzeta
