#include "lucas/analysis.hpp"

#include <string>

#include "lucas/error.hpp"
#include "lucas/matrices.hpp"

namespace lucas {

BigInt gl_order(int lambda, Prime p) {
  if (lambda < 1) throw Error(Errc::OrderOutOfRange, "lambda must be >= 1");
  const BigInt base = p.value();
  const BigInt top = boost::multiprecision::pow(base, static_cast<unsigned>(lambda));
  BigInt order = 1;
  BigInt power = 1;  // p^i for i = 0 .. lambda-1
  for (int i = 0; i < lambda; ++i) {
    order *= top - power;
    power *= base;
  }
  return order;
}

KeyspaceReport keyspace_report(int lambda, Prime p) {
  BigInt order = gl_order(lambda, p);
  const auto digits = static_cast<int>(order.str().size());
  return KeyspaceReport{lambda, p, std::move(order), digits - 1};
}

std::string KeyspaceReport::significand(int digits) const {
  const std::string s = gl_order.str();
  std::string out(1, s[0]);
  if (digits > 1 && s.size() > 1) {
    out.push_back('.');
    out += s.substr(1, static_cast<std::size_t>(digits - 1));
  }
  return out;
}

std::string format_report(const KeyspaceReport& report) {
  return "lambda=" + std::to_string(report.lambda) + " p=" + std::to_string(report.p.value()) +
         " gl_order=" + report.gl_order.str() + " magnitude=10^" + std::to_string(report.decimal_magnitude);
}

std::uint64_t brute_force_gl_count(int lambda, Prime p, std::uint64_t max_space) {
  if (lambda < 1) throw Error(Errc::OrderOutOfRange, "lambda must be >= 1");
  const auto cells = static_cast<std::size_t>(lambda) * static_cast<std::size_t>(lambda);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    space *= p.value();
    if (space > max_space) {
      throw Error(Errc::SearchSpaceTooLarge, "p^(lambda^2) exceeds " + std::to_string(max_space));
    }
  }

  ResidueMatrix::Storage m = ResidueMatrix::Storage::Zero(lambda, lambda);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < space; ++code) {
    std::uint64_t rest = code;
    for (std::size_t c = 0; c < cells; ++c) {
      m(static_cast<Eigen::Index>(c / lambda), static_cast<Eigen::Index>(c % lambda)) = rest % p.value();
      rest /= p.value();
    }
    if (mat_det(ResidueMatrix(m, p)).value() != 0) ++count;
  }
  return count;
}

}  // namespace lucas
