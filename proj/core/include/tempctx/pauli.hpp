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

#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace tempctx {

using Complex = std::complex<double>;

/// Dense complex matrix of dimension 2 (one site) or 4 (two sites).
using DenseOperator =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

/// Largest absolute entry of a dense operator.
double max_norm(const DenseOperator& m);

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter p);
/// Accepts I, X, Y, Z (either case). Throws std::invalid_argument otherwise.
PauliLetter letter_from_char(char c);

/// True when the two single-site letters anticommute (distinct non-identity).
constexpr bool anticommute(PauliLetter a, PauliLetter b) {
  return a != PauliLetter::I && b != PauliLetter::I && a != b;
}

/**
 * A word of Pauli letters on one or two sites, without phase.
 *
 * Site 1 is the leftmost letter and the left Kronecker factor when lowered to
 * a dense matrix, so the word "XY" means sigma_x on site 1 and sigma_y on
 * site 2.
 */
class PauliWord {
 public:
  static constexpr std::size_t kMaxSites = 2;

  /// Throws std::invalid_argument unless 1 <= letters.size() <= 2.
  PauliWord(std::initializer_list<PauliLetter> letters);
  /// Parses e.g. "X", "XY", "IZ".
  static PauliWord parse(std::string_view word);
  static PauliWord identity(std::size_t sites);

  std::size_t site_count() const { return sites_; }
  PauliLetter operator[](std::size_t site) const { return letters_[site]; }
  bool is_identity() const;
  std::string to_string() const;

  friend auto operator<=>(const PauliWord&, const PauliWord&) = default;

 private:
  PauliWord() = default;

  std::array<PauliLetter, kMaxSites> letters_{};
  std::uint8_t sites_ = 0;

  friend class PauliTerm;
  friend PauliWord concat(const PauliWord&, const PauliWord&);
};

/// Two-site word with `left` on site 1. Both inputs must be single-site.
PauliWord concat(const PauliWord& left, const PauliWord& right);

/**
 * An element of the Pauli group: i^k times a PauliWord.
 *
 * The phase is kept as an exponent of i reduced mod 4, so products are exact.
 */
class PauliTerm {
 public:
  PauliTerm(PauliWord word, int phase_exponent = 0);
  PauliTerm(PauliLetter letter, int phase_exponent = 0);
  static PauliTerm parse(std::string_view word, int phase_exponent = 0) {
    return PauliTerm(PauliWord::parse(word), phase_exponent);
  }
  static PauliTerm identity(std::size_t sites) {
    return PauliTerm(PauliWord::identity(sites));
  }

  const PauliWord& word() const { return word_; }
  int phase_exponent() const { return phase_; }
  std::size_t site_count() const { return word_.site_count(); }
  /// i^phase_exponent as a complex number (exact components).
  Complex phase() const;

  std::string to_string() const;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  PauliWord word_;
  std::uint8_t phase_ = 0;
};

/// Group product a*b. Throws std::invalid_argument on mismatched site count.
PauliTerm multiply_terms(const PauliTerm& a, const PauliTerm& b);
inline PauliTerm operator*(const PauliTerm& a, const PauliTerm& b) {
  return multiply_terms(a, b);
}

/// a (site 1) tensor b (site 2); phases add. Both must be single-site.
PauliTerm tensor(const PauliTerm& a, const PauliTerm& b);

/// True iff ab = ba, i.e. the letters anticommute on an even number of sites.
bool commutes(const PauliTerm& a, const PauliTerm& b);

/**
 * Complex-linear combination of Pauli words on one or two sites.
 *
 * Coefficients with magnitude below kDropThreshold are never stored, so the
 * zero polynomial has no terms. Values are immutable; arithmetic returns new
 * polynomials.
 */
class PauliPolynomial {
 public:
  static constexpr double kDropThreshold = 1e-12;
  using TermMap = std::map<PauliWord, Complex>;

  /// The zero polynomial on `sites` sites.
  explicit PauliPolynomial(std::size_t sites);
  PauliPolynomial(const PauliTerm& term, Complex coefficient = 1.0);
  PauliPolynomial(std::size_t sites,
                  std::initializer_list<std::pair<Complex, PauliTerm>> terms);

  static PauliPolynomial identity(std::size_t sites, Complex scale = 1.0) {
    return PauliPolynomial(PauliTerm::identity(sites), scale);
  }

  std::size_t site_count() const { return sites_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(const PauliWord& word) const;

  /// The single stored term, if the polynomial is a monomial.
  std::optional<std::pair<PauliWord, Complex>> as_monomial() const;

  /// Human-readable form, e.g. "0.5*X - 0.5*Y" or "-1*I".
  std::string to_string() const;

  PauliPolynomial operator-() const;
  friend PauliPolynomial operator+(const PauliPolynomial& a,
                                   const PauliPolynomial& b);
  friend PauliPolynomial operator-(const PauliPolynomial& a,
                                   const PauliPolynomial& b);
  friend PauliPolynomial operator*(Complex s, const PauliPolynomial& p);
  friend PauliPolynomial operator*(const PauliPolynomial& a,
                                   const PauliPolynomial& b);

 private:
  void accumulate(const PauliWord& word, Complex c);
  void canonicalize();

  TermMap terms_;
  std::size_t sites_;
};

/// Distributes over terms; throws std::invalid_argument on mismatched sites.
PauliPolynomial poly_multiply(const PauliPolynomial& a,
                              const PauliPolynomial& b);

/// ab - ba.
PauliPolynomial commutator(const PauliPolynomial& a, const PauliPolynomial& b);

/// Pauli words are Hermitian, so this checks that every coefficient is real.
bool is_hermitian(const PauliPolynomial& p, double tol = 1e-12);

/// Coefficientwise comparison; absent words count as zero.
bool approx_equal(const PauliPolynomial& a, const PauliPolynomial& b,
                  double tol = 1e-12);

DenseOperator to_dense(PauliLetter letter);
DenseOperator to_dense(const PauliTerm& term);
DenseOperator to_dense(const PauliPolynomial& p);

}  // namespace tempctx
