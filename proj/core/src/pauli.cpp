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

#include "tempctx/pauli.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tempctx {

namespace {

struct LetterProduct {
  PauliLetter letter;
  std::uint8_t phase;  // exponent of i
};

constexpr PauliLetter I = PauliLetter::I;
constexpr PauliLetter X = PauliLetter::X;
constexpr PauliLetter Y = PauliLetter::Y;
constexpr PauliLetter Z = PauliLetter::Z;

// kProduct[a][b] = a*b, e.g. X*Y = iZ, Y*X = -iZ.
constexpr LetterProduct kProduct[4][4] = {
    {{I, 0}, {X, 0}, {Y, 0}, {Z, 0}},
    {{X, 0}, {I, 0}, {Z, 1}, {Y, 3}},
    {{Y, 0}, {Z, 3}, {I, 0}, {X, 1}},
    {{Z, 0}, {Y, 1}, {X, 3}, {I, 0}},
};

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_same_sites(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) +
                                ": operands act on different site counts (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

int reduce_phase(int k) { return ((k % 4) + 4) % 4; }

std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string format_coefficient(Complex c) {
  if (c.imag() == 0.0) return format_real(c.real());
  if (c.real() == 0.0) return format_real(c.imag()) + "i";
  return "(" + format_real(c.real()) + (c.imag() < 0 ? "" : "+") +
         format_real(c.imag()) + "i)";
}

}  // namespace

double max_norm(const DenseOperator& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

char to_char(PauliLetter p) { return "IXYZ"[static_cast<int>(p)]; }

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return PauliLetter::I;
    case 'X': case 'x': return PauliLetter::X;
    case 'Y': case 'y': return PauliLetter::Y;
    case 'Z': case 'z': return PauliLetter::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + c +
                                  "'");
  }
}

// ---- PauliWord ----

PauliWord::PauliWord(std::initializer_list<PauliLetter> letters) {
  if (letters.size() == 0 || letters.size() > kMaxSites) {
    throw std::invalid_argument("Pauli words span 1 or 2 sites");
  }
  sites_ = static_cast<std::uint8_t>(letters.size());
  std::size_t i = 0;
  for (PauliLetter l : letters) letters_[i++] = l;
}

PauliWord PauliWord::parse(std::string_view word) {
  if (word.empty() || word.size() > kMaxSites) {
    throw std::invalid_argument("Pauli words span 1 or 2 sites: '" +
                                std::string(word) + "'");
  }
  PauliWord w;
  w.sites_ = static_cast<std::uint8_t>(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    w.letters_[i] = letter_from_char(word[i]);
  }
  return w;
}

PauliWord PauliWord::identity(std::size_t sites) {
  if (sites == 0 || sites > kMaxSites) {
    throw std::invalid_argument("Pauli words span 1 or 2 sites");
  }
  PauliWord w;
  w.sites_ = static_cast<std::uint8_t>(sites);
  return w;
}

bool PauliWord::is_identity() const {
  for (std::size_t i = 0; i < sites_; ++i) {
    if (letters_[i] != PauliLetter::I) return false;
  }
  return true;
}

std::string PauliWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < sites_; ++i) s += to_char(letters_[i]);
  return s;
}

PauliWord concat(const PauliWord& left, const PauliWord& right) {
  if (left.site_count() != 1 || right.site_count() != 1) {
    throw std::invalid_argument("tensor: both factors must be single-site");
  }
  return PauliWord{left[0], right[0]};
}

// ---- PauliTerm ----

PauliTerm::PauliTerm(PauliWord word, int phase_exponent)
    : word_(word), phase_(static_cast<std::uint8_t>(reduce_phase(phase_exponent))) {}

PauliTerm::PauliTerm(PauliLetter letter, int phase_exponent)
    : PauliTerm(PauliWord{letter}, phase_exponent) {}

Complex PauliTerm::phase() const { return kPhases[phase_]; }

std::string PauliTerm::to_string() const {
  static constexpr const char* kPrefix[4] = {"", "i*", "-", "-i*"};
  return kPrefix[phase_] + word_.to_string();
}

PauliTerm multiply_terms(const PauliTerm& a, const PauliTerm& b) {
  require_same_sites(a.site_count(), b.site_count(), "multiply_terms");
  PauliWord word = PauliWord::identity(a.site_count());
  int phase = a.phase_exponent() + b.phase_exponent();
  std::array<PauliLetter, PauliWord::kMaxSites> letters{};
  for (std::size_t s = 0; s < a.site_count(); ++s) {
    const auto& p = kProduct[static_cast<int>(a.word()[s])]
                            [static_cast<int>(b.word()[s])];
    letters[s] = p.letter;
    phase += p.phase;
  }
  if (a.site_count() == 1) {
    word = PauliWord{letters[0]};
  } else {
    word = PauliWord{letters[0], letters[1]};
  }
  return PauliTerm(word, phase);
}

PauliTerm tensor(const PauliTerm& a, const PauliTerm& b) {
  return PauliTerm(concat(a.word(), b.word()),
                   a.phase_exponent() + b.phase_exponent());
}

bool commutes(const PauliTerm& a, const PauliTerm& b) {
  require_same_sites(a.site_count(), b.site_count(), "commutes");
  int anticommuting_sites = 0;
  for (std::size_t s = 0; s < a.site_count(); ++s) {
    if (anticommute(a.word()[s], b.word()[s])) ++anticommuting_sites;
  }
  return anticommuting_sites % 2 == 0;
}

// ---- PauliPolynomial ----

PauliPolynomial::PauliPolynomial(std::size_t sites) : sites_(sites) {
  if (sites == 0 || sites > PauliWord::kMaxSites) {
    throw std::invalid_argument("Pauli polynomials span 1 or 2 sites");
  }
}

PauliPolynomial::PauliPolynomial(const PauliTerm& term, Complex coefficient)
    : PauliPolynomial(term.site_count()) {
  accumulate(term.word(), coefficient * term.phase());
  canonicalize();
}

PauliPolynomial::PauliPolynomial(
    std::size_t sites,
    std::initializer_list<std::pair<Complex, PauliTerm>> terms)
    : PauliPolynomial(sites) {
  for (const auto& [c, t] : terms) {
    require_same_sites(sites, t.site_count(), "PauliPolynomial");
    accumulate(t.word(), c * t.phase());
  }
  canonicalize();
}

void PauliPolynomial::accumulate(const PauliWord& word, Complex c) {
  terms_[word] += c;
}

void PauliPolynomial::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) {
    return std::abs(kv.second) < kDropThreshold;
  });
}

Complex PauliPolynomial::coefficient(const PauliWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Complex{} : it->second;
}

std::optional<std::pair<PauliWord, Complex>> PauliPolynomial::as_monomial()
    const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

std::string PauliPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [word, c] : terms_) {
    const bool negative_real = c.imag() == 0.0 && c.real() < 0.0;
    if (!first) s += negative_real ? " - " : " + ";
    Complex shown = (!first && negative_real) ? -c : c;
    s += format_coefficient(shown) + "*" + word.to_string();
    first = false;
  }
  return s;
}

PauliPolynomial PauliPolynomial::operator-() const {
  return Complex(-1.0) * *this;
}

PauliPolynomial operator+(const PauliPolynomial& a, const PauliPolynomial& b) {
  require_same_sites(a.sites_, b.sites_, "PauliPolynomial::operator+");
  PauliPolynomial out = a;
  for (const auto& [w, c] : b.terms_) out.accumulate(w, c);
  out.canonicalize();
  return out;
}

PauliPolynomial operator-(const PauliPolynomial& a, const PauliPolynomial& b) {
  return a + (-b);
}

PauliPolynomial operator*(Complex s, const PauliPolynomial& p) {
  PauliPolynomial out(p.sites_);
  for (const auto& [w, c] : p.terms_) out.accumulate(w, s * c);
  out.canonicalize();
  return out;
}

PauliPolynomial operator*(const PauliPolynomial& a, const PauliPolynomial& b) {
  require_same_sites(a.sites_, b.sites_, "poly_multiply");
  PauliPolynomial out(a.sites_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      const PauliTerm prod = multiply_terms(PauliTerm(wa), PauliTerm(wb));
      out.accumulate(prod.word(), ca * cb * prod.phase());
    }
  }
  out.canonicalize();
  return out;
}

PauliPolynomial poly_multiply(const PauliPolynomial& a,
                              const PauliPolynomial& b) {
  return a * b;
}

PauliPolynomial commutator(const PauliPolynomial& a, const PauliPolynomial& b) {
  return a * b - b * a;
}

bool is_hermitian(const PauliPolynomial& p, double tol) {
  for (const auto& [w, c] : p.terms()) {
    if (std::abs(c.imag()) >= tol) return false;
  }
  return true;
}

bool approx_equal(const PauliPolynomial& a, const PauliPolynomial& b,
                  double tol) {
  if (a.site_count() != b.site_count()) return false;
  for (const auto& [w, c] : a.terms()) {
    if (std::abs(c - b.coefficient(w)) >= tol) return false;
  }
  for (const auto& [w, c] : b.terms()) {
    if (std::abs(c - a.coefficient(w)) >= tol) return false;
  }
  return true;
}

// ---- dense lowering ----

DenseOperator to_dense(PauliLetter letter) {
  using namespace std::complex_literals;
  DenseOperator m(2, 2);
  switch (letter) {
    case PauliLetter::I: m << 1.0, 0.0, 0.0, 1.0; break;
    case PauliLetter::X: m << 0.0, 1.0, 1.0, 0.0; break;
    case PauliLetter::Y: m << 0.0, -1.0i, 1.0i, 0.0; break;
    case PauliLetter::Z: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

namespace {

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator word_to_dense(const PauliWord& w) {
  DenseOperator m = to_dense(w[0]);
  for (std::size_t s = 1; s < w.site_count(); ++s) m = kron(m, to_dense(w[s]));
  return m;
}

}  // namespace

DenseOperator to_dense(const PauliTerm& term) {
  return term.phase() * word_to_dense(term.word());
}

DenseOperator to_dense(const PauliPolynomial& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.site_count();
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& [w, c] : p.terms()) m += c * word_to_dense(w);
  return m;
}

}  // namespace tempctx
