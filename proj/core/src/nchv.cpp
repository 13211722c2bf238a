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

#include "tempctx/nchv.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

namespace tempctx {

using Bits = boost::dynamic_bitset<>;

// ---- SignVariable ----

std::string SignVariable::name() const {
  return family + "_" + axis + "^" + std::to_string(slot);
}

SignVariable SignVariable::parse(std::string_view text) {
  auto fail = [&]() -> SignVariable {
    throw std::invalid_argument("bad sign variable '" + std::string(text) +
                                "' (expected e.g. m_x^1)");
  };
  const auto us = text.find('_');
  const auto caret = text.find('^');
  if (us == std::string_view::npos || caret != us + 2 || us == 0) return fail();
  SignVariable v;
  v.family = std::string(text.substr(0, us));
  for (char c : v.family) {
    if (!std::isalpha(static_cast<unsigned char>(c))) return fail();
  }
  v.axis = static_cast<char>(std::tolower(static_cast<unsigned char>(text[us + 1])));
  if (v.axis != 'x' && v.axis != 'y' && v.axis != 'z') return fail();
  const auto digits = text.substr(caret + 1);
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, v.slot);
  if (digits.empty() || ec != std::errc{} || ptr != end || v.slot < 1) return fail();
  return v;
}

// ---- ConstraintSystem ----

ConstraintSystem::ConstraintSystem(std::vector<SignVariable> variables,
                                   std::vector<MonomialConstraint> constraints)
    : variables_(std::move(variables)), constraints_(std::move(constraints)) {
  std::set<SignVariable> declared;
  for (const auto& v : variables_) {
    if (!declared.insert(v).second) {
      throw std::invalid_argument("variable " + v.name() + " declared twice");
    }
  }
  for (std::size_t k = 0; k < constraints_.size(); ++k) {
    const auto& c = constraints_[k];
    if (c.variables.empty()) {
      throw std::invalid_argument("constraint " + std::to_string(k + 1) +
                                  " has no variables");
    }
    std::set<SignVariable> seen;
    for (const auto& v : c.variables) {
      if (!declared.contains(v)) {
        throw std::invalid_argument("constraint " + std::to_string(k + 1) +
                                    " uses undeclared variable " + v.name());
      }
      if (!seen.insert(v).second) {
        throw std::invalid_argument("constraint " + std::to_string(k + 1) +
                                    " repeats variable " + v.name());
      }
    }
  }
}

std::size_t ConstraintSystem::index_of(const SignVariable& v) const {
  const auto it = std::find(variables_.begin(), variables_.end(), v);
  if (it == variables_.end()) {
    throw std::out_of_range("undeclared variable " + v.name());
  }
  return static_cast<std::size_t>(it - variables_.begin());
}

ConstraintSystem ConstraintSystem::without_constraint(std::size_t index) const {
  auto cs = constraints_;
  cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(index));
  return ConstraintSystem(variables_, std::move(cs));
}

ConstraintSystem ConstraintSystem::with_flipped_sign(std::size_t index) const {
  auto cs = constraints_;
  cs.at(index).required = -cs.at(index).required;
  return ConstraintSystem(variables_, std::move(cs));
}

std::string ConstraintSystem::to_json() const {
  nlohmann::json doc;
  doc["variables"] = nlohmann::json::array();
  for (const auto& v : variables_) doc["variables"].push_back(v.name());
  doc["constraints"] = nlohmann::json::array();
  for (const auto& c : constraints_) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : c.variables) vars.push_back(v.name());
    doc["constraints"].push_back({{"vars", vars}, {"sign", c.required.value()}});
  }
  return doc.dump(2);
}

ConstraintSystem ConstraintSystem::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("constraint file is not JSON: ") +
                                e.what());
  }
  try {
    std::vector<SignVariable> vars;
    for (const auto& name : doc.at("variables")) {
      vars.push_back(SignVariable::parse(name.get<std::string>()));
    }
    std::vector<MonomialConstraint> cons;
    for (const auto& c : doc.at("constraints")) {
      MonomialConstraint mc;
      for (const auto& name : c.at("vars")) {
        mc.variables.push_back(SignVariable::parse(name.get<std::string>()));
      }
      mc.required = Sign::from_int(c.at("sign").get<int>());
      cons.push_back(std::move(mc));
    }
    return ConstraintSystem(std::move(vars), std::move(cons));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed constraint file: ") +
                                e.what());
  }
}

bool satisfies(const ConstraintSystem& sys, const Assignment& a) {
  for (const auto& c : sys.constraints()) {
    Sign product = Sign::plus();
    for (const auto& v : c.variables) product *= a.value(sys.index_of(v));
    if (product != c.required) return false;
  }
  return true;
}

// ---- constraint generation ----

ConstraintSystem constraints_from_contexts(const ContextSet& cs) {
  const std::string family = cs.variant() == Variant::temporal ? "m" : "v";
  auto variable_for = [&](const MeasurementEvent& e) {
    return SignVariable{
        family,
        static_cast<char>(std::tolower(static_cast<unsigned char>(to_char(e.axis())))),
        e.slot()};
  };

  std::set<SignVariable> declared;
  std::vector<MonomialConstraint> constraints;
  for (const auto& ctx : cs.contexts()) {
    if (!ctx.quantum_eigenvalue()) {
      throw std::invalid_argument("context " + std::to_string(ctx.id()) +
                                  " has no quantum eigenvalue");
    }
    // A value occurring twice in one product squares to +1 and drops out.
    std::vector<SignVariable> odd;
    for (const auto& e : ctx.value_factors()) {
      const SignVariable v = variable_for(e);
      const auto it = std::find(odd.begin(), odd.end(), v);
      if (it == odd.end()) {
        odd.push_back(v);
      } else {
        odd.erase(it);
      }
    }
    declared.insert(odd.begin(), odd.end());
    constraints.push_back({std::move(odd), *ctx.quantum_eigenvalue()});
  }
  return ConstraintSystem({declared.begin(), declared.end()}, std::move(constraints));
}

// ---- exhaustive enumeration ----

namespace {

struct PackedConstraint {
  std::uint64_t candidate_mask;  // variable i at bit (n - 1 - i)
  unsigned sign_bit;             // 1 when the required sign is -1
};

std::vector<PackedConstraint> pack_for_enumeration(const ConstraintSystem& sys) {
  const std::size_t n = sys.variables().size();
  if (n > kMaxEnumerationVariables) {
    throw CapacityError("exhaustive enumeration is limited to " +
                        std::to_string(kMaxEnumerationVariables) +
                        " variables, system has " + std::to_string(n));
  }
  std::vector<PackedConstraint> packed;
  for (const auto& c : sys.constraints()) {
    std::uint64_t mask = 0;
    for (const auto& v : c.variables) mask |= std::uint64_t{1} << (n - 1 - sys.index_of(v));
    packed.push_back({mask, c.required.is_minus() ? 1u : 0u});
  }
  return packed;
}

bool candidate_ok(std::uint64_t candidate, const std::vector<PackedConstraint>& pc) {
  for (const auto& c : pc) {
    if ((static_cast<unsigned>(std::popcount(candidate & c.candidate_mask)) & 1u) !=
        c.sign_bit) {
      return false;
    }
  }
  return true;
}

std::uint64_t candidate_to_mask(std::uint64_t candidate, std::size_t n) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((candidate >> (n - 1 - i)) & 1u) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace

std::vector<Assignment> enumerate_assignments(const ConstraintSystem& sys) {
  const auto packed = pack_for_enumeration(sys);
  const std::size_t n = sys.variables().size();
  std::vector<Assignment> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t c = 0; c < total; ++c) {
    if (candidate_ok(c, packed)) out.emplace_back(candidate_to_mask(c, n), n);
  }
  return out;
}

std::uint64_t count_assignments(const ConstraintSystem& sys) {
  const auto packed = pack_for_enumeration(sys);
  const std::uint64_t total = std::uint64_t{1} << sys.variables().size();
  std::uint64_t count = 0;
  for (std::uint64_t c = 0; c < total; ++c) count += candidate_ok(c, packed);
  return count;
}

// ---- parity certificates ----

namespace {

// Incidence rows augmented with the sign bit in the last position.
std::vector<Bits> augmented_rows(const ConstraintSystem& sys) {
  const std::size_t n = sys.variables().size();
  std::vector<Bits> rows;
  for (const auto& c : sys.constraints()) {
    Bits row(n + 1);
    for (const auto& v : c.variables) row.flip(sys.index_of(v));
    if (c.required.is_minus()) row.set(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_contradiction(const Bits& row, std::size_t n) {
  if (!row.test(n)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (row.test(i)) return false;
  }
  return true;
}

// Gaussian elimination over the variable columns, tracking which original
// rows make up each reduced row. Returns one contradictory combination.
std::optional<std::vector<std::size_t>> eliminate(std::vector<Bits> rows,
                                                  std::size_t n) {
  const std::size_t m = rows.size();
  std::vector<Bits> origin(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) origin[i].set(i);

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
    std::size_t r = pivot_row;
    while (r < m && !rows[r].test(col)) ++r;
    if (r == m) continue;
    std::swap(rows[r], rows[pivot_row]);
    std::swap(origin[r], origin[pivot_row]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != pivot_row && rows[i].test(col)) {
        rows[i] ^= rows[pivot_row];
        origin[i] ^= origin[pivot_row];
      }
    }
    ++pivot_row;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (is_contradiction(rows[i], n)) {
      std::vector<std::size_t> subset;
      for (auto k = origin[i].find_first(); k != Bits::npos; k = origin[i].find_next(k)) {
        subset.push_back(k);
      }
      return subset;
    }
  }
  return std::nullopt;
}

// Depth-first search over k-subsets in lexicographic order.
bool search_subsets(const std::vector<Bits>& rows, std::size_t n, std::size_t k,
                    std::size_t start, std::vector<Bits>& acc,
                    std::vector<std::size_t>& chosen) {
  const std::size_t depth = chosen.size();
  if (depth == k) return is_contradiction(acc[depth], n);
  for (std::size_t i = start; i + (k - depth) <= rows.size(); ++i) {
    acc[depth + 1] = acc[depth];
    acc[depth + 1] ^= rows[i];
    chosen.push_back(i);
    if (search_subsets(rows, n, k, i + 1, acc, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<ParityCertificate> parity_certificate(const ConstraintSystem& sys) {
  const std::size_t n = sys.variables().size();
  const auto rows = augmented_rows(sys);
  auto found = eliminate(rows, n);
  if (!found) return std::nullopt;

  ParityCertificate cert;
  if (rows.size() > kMaxMinimalCertificateConstraints) {
    cert.constraint_subset = std::move(*found);
    cert.minimal = false;
    return cert;
  }
  for (std::size_t k = 1; k <= rows.size(); ++k) {
    std::vector<Bits> acc(k + 1, Bits(n + 1));
    std::vector<std::size_t> chosen;
    if (search_subsets(rows, n, k, 0, acc, chosen)) {
      cert.constraint_subset = std::move(chosen);
      return cert;
    }
  }
  throw std::logic_error("elimination found a certificate that search missed");
}

bool verify_certificate(const ConstraintSystem& sys, const ParityCertificate& cert) {
  if (cert.constraint_subset.empty()) return false;
  std::map<SignVariable, int> occurrences;
  Sign parity = Sign::plus();
  for (std::size_t k : cert.constraint_subset) {
    if (k >= sys.constraints().size()) return false;
    const auto& c = sys.constraints()[k];
    for (const auto& v : c.variables) ++occurrences[v];
    parity *= c.required;
  }
  for (const auto& [v, count] : occurrences) {
    if (count % 2 != 0) return false;
  }
  return parity == Sign::minus() && cert.parity_of_signs == Sign::minus();
}

CrossCheckReport cross_check(const ConstraintSystem& sys) {
  CrossCheckReport report;
  report.satisfying_assignments = count_assignments(sys);
  report.certificate = parity_certificate(sys);
  if (report.certificate && !verify_certificate(sys, *report.certificate)) {
    throw std::logic_error("parity certificate failed verification");
  }
  if (report.certificate.has_value() == report.satisfiable()) {
    throw std::logic_error(
        "deciders disagree: enumeration found " +
        std::to_string(report.satisfying_assignments) +
        " assignments while a parity certificate " +
        (report.certificate ? "exists" : "does not exist"));
  }
  return report;
}

}  // namespace tempctx
