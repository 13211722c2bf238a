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

#include "tempctx/contexts.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tempctx {

namespace {

constexpr PauliLetter X = PauliLetter::X;
constexpr PauliLetter Y = PauliLetter::Y;
constexpr PauliLetter Z = PauliLetter::Z;

double dense_commutator_norm(const PauliPolynomial& a, const PauliPolynomial& b) {
  const DenseOperator da = to_dense(a);
  const DenseOperator db = to_dense(b);
  return max_norm(da * db - db * da);
}

std::vector<MeasurementEvent> events(
    std::initializer_list<std::pair<int, PauliLetter>> list) {
  std::vector<MeasurementEvent> out;
  for (auto [slot, axis] : list) out.emplace_back(slot, axis);
  return out;
}

// Factor layouts shared by both variants: (written operator order, value
// factors). Slot 2 is written on the left.
struct Layout {
  std::vector<MeasurementEvent> operator_factors;
  std::vector<MeasurementEvent> value_factors;
};

std::vector<Layout> temporal_layout() {
  return {
      {events({{2, X}, {1, Y}}), events({{2, X}, {1, Y}})},
      {events({{2, Y}, {1, X}}), events({{2, Y}, {1, X}})},
      {events({{2, Z}, {1, Z}}), events({{2, X}, {2, Y}, {1, Y}, {1, X}})},
  };
}

std::vector<Layout> spatial_layout() {
  return {
      {events({{1, X}, {2, X}}), events({{1, X}, {2, X}})},
      {events({{1, Y}, {2, Y}}), events({{1, Y}, {2, Y}})},
      {events({{1, Z}, {2, Z}}), events({{1, X}, {1, Y}, {2, Y}, {2, X}})},
  };
}

}  // namespace

std::string to_string(Variant v) {
  return v == Variant::temporal ? "temporal" : "spatial";
}

// ---- MeasurementEvent ----

MeasurementEvent::MeasurementEvent(int slot, PauliLetter axis)
    : slot_(slot), axis_(axis) {
  if (axis == PauliLetter::I) {
    throw std::invalid_argument("a measurement axis must be X, Y or Z");
  }
  if (slot != 1 && slot != 2) {
    throw std::invalid_argument("measurement slot must be 1 or 2");
  }
}

std::string MeasurementEvent::label(Variant v) const {
  std::string s = "sigma_";
  s += static_cast<char>(std::tolower(to_char(axis_)));
  if (v == Variant::temporal) return s + "(t" + std::to_string(slot_) + ")";
  return s + "^" + std::to_string(slot_);
}

// ---- Context ----

Context::Context(int id, std::vector<MeasurementEvent> operator_factors,
                 std::vector<MeasurementEvent> value_factors,
                 PauliPolynomial joint_operator,
                 std::optional<Sign> quantum_eigenvalue)
    : id_(id),
      operator_factors_(std::move(operator_factors)),
      value_factors_(std::move(value_factors)),
      joint_(std::move(joint_operator)),
      eigenvalue_(quantum_eigenvalue) {
  if (operator_factors_.empty() || value_factors_.empty()) {
    throw std::invalid_argument("a context needs at least one factor");
  }
}

std::vector<MeasurementEvent> Context::measurement_order() const {
  std::vector<MeasurementEvent> order = operator_factors_;
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.slot() < b.slot(); });
  return order;
}

std::string Context::label(Variant v) const {
  std::string s;
  for (const auto& e : operator_factors_) {
    if (!s.empty()) s += ' ';
    s += e.label(v);
  }
  return s;
}

Context Context::with_eigenvalue(Sign s) const {
  Context c = *this;
  c.eigenvalue_ = s;
  return c;
}

// ---- ContextSet ----

ContextSet::ContextSet(Variant variant, std::vector<Context> contexts,
                       std::optional<AnglePair> angles)
    : variant_(variant), contexts_(std::move(contexts)), angles_(angles) {
  if (variant_ == Variant::temporal && !angles_) {
    throw std::invalid_argument("temporal context sets need two angles");
  }
  for (std::size_t i = 0; i < contexts_.size(); ++i) {
    for (std::size_t j = i + 1; j < contexts_.size(); ++j) {
      const double norm = dense_commutator_norm(contexts_[i].joint_operator(),
                                                contexts_[j].joint_operator());
      if (norm >= kCommutingTolerance) {
        throw std::logic_error("joint operators of contexts " +
                               std::to_string(contexts_[i].id()) + " and " +
                               std::to_string(contexts_[j].id()) +
                               " do not commute");
      }
    }
  }
}

const Context& ContextSet::context(int id) const {
  for (const auto& c : contexts_) {
    if (c.id() == id) return c;
  }
  throw std::out_of_range("no context with id " + std::to_string(id));
}

PauliPolynomial ContextSet::event_operator(const MeasurementEvent& e) const {
  if (variant_ == Variant::temporal) {
    const PrecessionAngle& theta = e.slot() == 1 ? angles_->first : angles_->second;
    return evolve(e.axis(), theta);
  }
  const PauliTerm local(e.axis());
  const PauliTerm id = PauliTerm::identity(1);
  return PauliPolynomial(e.slot() == 1 ? tensor(local, id) : tensor(id, local));
}

PauliPolynomial ContextSet::product_of(
    const std::vector<MeasurementEvent>& events) const {
  PauliPolynomial p = PauliPolynomial::identity(site_count());
  for (const auto& e : events) p = p * event_operator(e);
  return p;
}

ContextSet ContextSet::with_eigenvalues_from(const StateVector& state) const {
  std::vector<Context> out;
  for (const auto& c : contexts_) {
    const auto lambda = eigen_action(c.joint_operator(), state);
    if (!lambda) {
      throw std::invalid_argument("state is not an eigenstate of " +
                                  c.label(variant_));
    }
    out.push_back(c.with_eigenvalue(*lambda));
  }
  return ContextSet(variant_, std::move(out), angles_);
}

std::vector<Sign> ContextSet::eigenvalues() const {
  std::vector<Sign> out;
  for (const auto& c : contexts_) {
    if (!c.quantum_eigenvalue()) {
      throw std::logic_error("context " + std::to_string(c.id()) +
                             " has no eigenvalue yet");
    }
    out.push_back(*c.quantum_eigenvalue());
  }
  return out;
}

// ---- diagnostics and construction ----

bool TemporalDiagnostics::all_hermitian() const {
  return std::all_of(hermitian.begin(), hermitian.end(), [](bool b) { return b; });
}

const PairCheck& TemporalDiagnostics::worst_pair() const {
  const PairCheck* worst = nullptr;
  for (const auto* list : {&factor_pairs, &context_pairs}) {
    for (const auto& p : *list) {
      if (!worst || p.commutator_norm > worst->commutator_norm) worst = &p;
    }
  }
  if (!worst) throw std::logic_error("no pairs were checked");
  return *worst;
}

namespace {

struct TemporalParts {
  std::vector<Context> contexts;
  TemporalDiagnostics diagnostics;
};

TemporalParts assemble_temporal(const PrecessionAngle& theta1,
                                const PrecessionAngle& theta2) {
  auto op = [&](const MeasurementEvent& e) {
    return evolve(e.axis(), e.slot() == 1 ? theta1 : theta2);
  };

  TemporalParts parts;
  int id = 1;
  for (auto& layout : temporal_layout()) {
    PauliPolynomial joint = PauliPolynomial::identity(1);
    for (const auto& e : layout.operator_factors) joint = joint * op(e);
    parts.diagnostics.hermitian.push_back(is_hermitian(joint));

    const auto& f = layout.operator_factors;
    parts.diagnostics.factor_pairs.push_back(
        {f[0].label(Variant::temporal), f[1].label(Variant::temporal),
         dense_commutator_norm(op(f[0]), op(f[1]))});

    parts.contexts.emplace_back(id++, layout.operator_factors,
                                layout.value_factors, std::move(joint));
  }
  for (std::size_t i = 0; i < parts.contexts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.contexts.size(); ++j) {
      parts.diagnostics.context_pairs.push_back(
          {parts.contexts[i].label(Variant::temporal),
           parts.contexts[j].label(Variant::temporal),
           dense_commutator_norm(parts.contexts[i].joint_operator(),
                                 parts.contexts[j].joint_operator())});
    }
  }
  double worst = 0.0;
  for (const auto* list :
       {&parts.diagnostics.factor_pairs, &parts.diagnostics.context_pairs}) {
    for (const auto& p : *list) worst = std::max(worst, p.commutator_norm);
  }
  parts.diagnostics.max_commutator_norm = worst;
  return parts;
}

}  // namespace

TemporalDiagnostics diagnose_temporal(const PrecessionAngle& theta1,
                                      const PrecessionAngle& theta2) {
  return assemble_temporal(theta1, theta2).diagnostics;
}

TemporalBuild build_temporal_contexts(const PrecessionAngle& theta1,
                                      const PrecessionAngle& theta2) {
  TemporalParts parts = assemble_temporal(theta1, theta2);
  const TemporalDiagnostics& d = parts.diagnostics;
  if (!d.commuting()) {
    return ContextRejection{"contexts not mutually commuting", d.worst_pair(), d};
  }
  if (!d.all_hermitian()) {
    const auto it = std::find(d.hermitian.begin(), d.hermitian.end(), false);
    const auto k = static_cast<std::size_t>(it - d.hermitian.begin());
    return ContextRejection{"joint operator is not Hermitian",
                            d.factor_pairs[k], d};
  }
  std::vector<Context> contexts;
  for (const auto& c : parts.contexts) {
    const auto lambda = scalar_identity_eigenvalue(c.joint_operator());
    contexts.push_back(lambda ? c.with_eigenvalue(*lambda) : c);
  }
  return ContextSet(Variant::temporal, std::move(contexts),
                    AnglePair{theta1, theta2});
}

ContextSet build_spatial_contexts() {
  std::vector<Context> contexts;
  int id = 1;
  // Joint operators are assembled through a temporary set so that the
  // site embedding lives in one place.
  const ContextSet embed(Variant::spatial, {});
  for (auto& layout : spatial_layout()) {
    PauliPolynomial joint = embed.product_of(layout.operator_factors);
    contexts.emplace_back(id++, layout.operator_factors, layout.value_factors,
                          std::move(joint));
  }
  return ContextSet(Variant::spatial, std::move(contexts));
}

std::optional<Sign> eigen_action(const PauliPolynomial& op,
                                 const StateVector& state, double tol) {
  const DenseOperator m = to_dense(op);
  if (m.rows() != state.dim()) {
    throw std::invalid_argument("eigen_action: operator acts on dimension " +
                                std::to_string(m.rows()) + ", state has " +
                                std::to_string(state.dim()));
  }
  if (std::abs(state.amplitudes().norm() - 1.0) > StateVector::kNormTolerance) {
    throw std::invalid_argument("eigen_action: state is not normalized");
  }
  const Amplitudes image = m * state.amplitudes();
  for (Sign s : {Sign::plus(), Sign::minus()}) {
    if ((image - double(s.value()) * state.amplitudes()).norm() < tol) return s;
  }
  return std::nullopt;
}

std::optional<Sign> scalar_identity_eigenvalue(const PauliPolynomial& op,
                                               double tol) {
  const auto mono = op.as_monomial();
  if (!mono || !mono->first.is_identity()) return std::nullopt;
  const Complex c = mono->second;
  if (std::abs(c.imag()) >= tol) return std::nullopt;
  return Sign::near(c.real(), tol);
}

bool third_context_factorization_check(const PrecessionAngle& theta1,
                                       const PrecessionAngle& theta2) {
  using namespace std::complex_literals;
  for (const auto* t : {&theta1, &theta2}) {
    const auto x = evolve_x(*t);
    const auto y = evolve_y(*t);
    const auto z = evolve_z(*t);
    if (!approx_equal(x * y, Complex(1.0i) * z)) return false;
    if (!approx_equal(y * x, Complex(-1.0i) * z)) return false;
  }
  const auto zz = evolve_z(theta2) * evolve_z(theta1);
  const auto four = evolve_x(theta2) * evolve_y(theta2) * evolve_y(theta1) *
                    evolve_x(theta1);
  return approx_equal(zz, four);
}

bool value_factorization_holds(const ContextSet& set, const Context& ctx) {
  return approx_equal(set.product_of(ctx.value_factors()), ctx.joint_operator());
}

std::vector<ScanPoint> scan_commuting_angles(std::size_t grid_points,
                                             const PrecessionAngle& theta1) {
  if (grid_points == 0) {
    throw std::invalid_argument("scan needs at least one grid point");
  }
  std::vector<ScanPoint> out;
  out.reserve(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const auto quarter = 4 * i;
    const PrecessionAngle delta =
        quarter % grid_points == 0
            ? PrecessionAngle::quarter_turns(static_cast<long long>(quarter / grid_points))
            : PrecessionAngle::radians(kTwoPi * static_cast<double>(i) /
                                       static_cast<double>(grid_points));
    const TemporalDiagnostics d = diagnose_temporal(theta1, theta1 + delta);
    out.push_back({i, delta, d.all_hermitian(), d.commuting(),
                   d.max_commutator_norm});
  }
  return out;
}

std::vector<std::size_t> quarter_turn_grid_indices(std::size_t grid_points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grid_points; ++i) {
    if ((4 * i) % grid_points == 0 && ((4 * i) / grid_points) % 2 == 1) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace tempctx
