// Copyright 2026 The tempctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tempctx/spin_dynamics.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace tempctx {

namespace {

constexpr double kExactCos[4] = {1.0, 0.0, -1.0, 0.0};
constexpr double kExactSin[4] = {0.0, 1.0, 0.0, -1.0};

// Reduces theta mod 4pi, returning the [0, 2pi) part and the turn parity.
std::pair<double, bool> reduce(double theta) {
  double r = std::fmod(theta, 2.0 * kTwoPi);
  if (r < 0.0) r += 2.0 * kTwoPi;
  if (r >= 2.0 * kTwoPi) r = 0.0;
  if (r >= kTwoPi) return {r - kTwoPi, true};
  return {r, false};
}

long long parse_integer(std::string_view s, std::string_view whole) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("cannot parse angle '" + std::string(whole) +
                                "'");
  }
  return v;
}

double parse_real(std::string_view s, std::string_view whole) {
  // std::from_chars for double is unavailable in libstdc++ 11.
  std::string copy(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != copy.size() || !std::isfinite(v)) {
    throw std::invalid_argument("cannot parse angle '" + std::string(whole) +
                                "'");
  }
  return v;
}

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

PrecessionAngle PrecessionAngle::radians(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("precession angle must be finite");
  }
  PrecessionAngle a;
  std::tie(a.value_, a.odd_turn_) = reduce(theta);
  a.quarter_.reset();
  return a;
}

PrecessionAngle PrecessionAngle::quarter_turns(long long k) {
  PrecessionAngle a;
  const int q8 = static_cast<int>(((k % 8) + 8) % 8);
  a.quarter_ = q8 % 4;
  a.odd_turn_ = q8 >= 4;
  a.value_ = (q8 % 4) * (kPi / 2.0);
  return a;
}

PrecessionAngle PrecessionAngle::pi_fraction(long long numerator,
                                             long long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("angle denominator must be nonzero");
  }
  if ((2 * numerator) % denominator == 0) {
    return quarter_turns(2 * numerator / denominator);
  }
  return radians(static_cast<double>(numerator) * kPi /
                 static_cast<double>(denominator));
}

PrecessionAngle PrecessionAngle::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '*') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (s.empty()) throw std::invalid_argument("empty angle");

  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) {
    if (is_integer_text(s) && parse_integer(s, text) == 0) {
      return quarter_turns(0);
    }
    return radians(parse_real(s, text));
  }

  const std::string head = s.substr(0, pi_pos);
  std::string tail = s.substr(pi_pos + 2);
  long long denominator = 1;
  bool rational = true;
  if (!tail.empty()) {
    if (tail[0] != '/') {
      throw std::invalid_argument("cannot parse angle '" + std::string(text) +
                                  "'");
    }
    tail.erase(0, 1);
    if (is_integer_text(tail)) {
      denominator = parse_integer(tail, text);
      if (denominator == 0) {
        throw std::invalid_argument("angle denominator must be nonzero");
      }
    } else {
      rational = false;
    }
  }
  long long numerator = 1;
  if (head.empty() || head == "+") {
    numerator = 1;
  } else if (head == "-") {
    numerator = -1;
  } else if (is_integer_text(head)) {
    numerator = parse_integer(head, text);
  } else {
    rational = false;
  }
  if (rational) return pi_fraction(numerator, denominator);

  double factor = 1.0;
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty() && head != "+") {
    factor = parse_real(head, text);
  }
  const double div = tail.empty() ? 1.0 : parse_real(tail, text);
  if (div == 0.0) throw std::invalid_argument("angle denominator must be nonzero");
  return radians(factor * kPi / div);
}

double PrecessionAngle::spinor_value() const {
  return odd_turn_ ? value_ + kTwoPi : value_;
}

double PrecessionAngle::cos() const {
  return quarter_ ? kExactCos[*quarter_] : std::cos(value_);
}

double PrecessionAngle::sin() const {
  return quarter_ ? kExactSin[*quarter_] : std::sin(value_);
}

std::string PrecessionAngle::to_string() const {
  if (quarter_) {
    static constexpr const char* kNames[4] = {"0", "pi/2", "pi", "3pi/2"};
    return kNames[*quarter_];
  }
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

PrecessionAngle operator+(const PrecessionAngle& a, const PrecessionAngle& b) {
  if (a.quarter_ && b.quarter_) {
    return PrecessionAngle::quarter_turns(*a.quarter_ + 4 * a.odd_turn_ +
                                          *b.quarter_ + 4 * b.odd_turn_);
  }
  return PrecessionAngle::radians(a.spinor_value() + b.spinor_value());
}

PrecessionAngle operator-(const PrecessionAngle& a, const PrecessionAngle& b) {
  if (a.quarter_ && b.quarter_) {
    return PrecessionAngle::quarter_turns(*a.quarter_ + 4 * a.odd_turn_ -
                                          *b.quarter_ - 4 * b.odd_turn_);
  }
  return PrecessionAngle::radians(a.spinor_value() - b.spinor_value());
}

HamiltonianSpec::HamiltonianSpec(double omega, double hbar)
    : omega_(omega), hbar_(hbar) {
  if (!(omega > 0.0) || !(hbar > 0.0)) {
    throw std::invalid_argument("Hamiltonian requires omega > 0 and hbar > 0");
  }
}

PauliPolynomial HamiltonianSpec::hamiltonian() const {
  return PauliPolynomial(PauliTerm(PauliLetter::Z), 0.5 * hbar_ * omega_);
}

PauliPolynomial evolve_x(const PrecessionAngle& theta) {
  return PauliPolynomial(1, {{theta.cos(), PauliTerm(PauliLetter::X)},
                             {-theta.sin(), PauliTerm(PauliLetter::Y)}});
}

PauliPolynomial evolve_y(const PrecessionAngle& theta) {
  return PauliPolynomial(1, {{theta.cos(), PauliTerm(PauliLetter::Y)},
                             {theta.sin(), PauliTerm(PauliLetter::X)}});
}

PauliPolynomial evolve_z(const PrecessionAngle&) {
  return PauliPolynomial(PauliTerm(PauliLetter::Z));
}

PauliPolynomial evolve(PauliLetter axis, const PrecessionAngle& theta) {
  switch (axis) {
    case PauliLetter::X: return evolve_x(theta);
    case PauliLetter::Y: return evolve_y(theta);
    case PauliLetter::Z: return evolve_z(theta);
    case PauliLetter::I: break;
  }
  throw std::invalid_argument("spin axis must be X, Y or Z");
}

PauliPolynomial heisenberg_rhs(PauliLetter axis, const HamiltonianSpec& h) {
  if (axis == PauliLetter::I) {
    throw std::invalid_argument("spin axis must be X, Y or Z");
  }
  const PauliPolynomial sigma{PauliTerm(axis)};
  const Complex scale = 1.0 / Complex(0.0, h.hbar());
  return scale * commutator(sigma, h.hamiltonian());
}

DenseOperator propagator(const PrecessionAngle& theta) {
  DenseOperator u = DenseOperator::Zero(2, 2);
  const double half = 0.5 * theta.spinor_value();
  u(0, 0) = std::polar(1.0, -half);
  u(1, 1) = std::polar(1.0, half);
  return u;
}

DenseOperator heisenberg_conjugate(const DenseOperator& op,
                                   const PrecessionAngle& theta) {
  const DenseOperator u = propagator(theta);
  return u.adjoint() * op * u;
}

}  // namespace tempctx
