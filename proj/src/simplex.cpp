// Copyright 2026 The exactlp authors
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

#include "exactlp/simplex.hpp"

#include <algorithm>
#include <cassert>

namespace exactlp {

namespace {
// Snapshot ring capacity; old snapshots beyond this are discarded from the
// front except the very first one, which stays as the restart of last resort.
constexpr size_t kMaxSnapshots = 64;
}  // namespace

template <class T>
SimplexSolver<T>::SimplexSolver(const FloatLP<T>& lp)
    : lp_(&lp),
      n_(lp.ncols()),
      m_(lp.nrows()),
      b_(lp.b),
      c_(lp.c),
      lower_(lp.lower),
      pos_of_(static_cast<size_t>(n_ + m_), -1) {
  set_basis(Basis::logical(n_, m_));
}

template <class T>
void SimplexSolver<T>::set_basis(const Basis& basis) {
  std::fill(pos_of_.begin(), pos_of_.end(), -1);
  basic_.clear();
  basic_.reserve(m_);
  for (int j : basis.basic) {
    if (j < 0 || j >= n_ + m_) continue;
    if (pos_of_[j] >= 0) continue;
    if (static_cast<int>(basic_.size()) == m_) break;
    pos_of_[j] = static_cast<int>(basic_.size());
    basic_.push_back(j);
  }
  // Pad with logicals of rows not already represented.
  for (int i = 0; i < m_ && static_cast<int>(basic_.size()) < m_; ++i) {
    int j = n_ + i;
    if (pos_of_[j] < 0) {
      pos_of_[j] = static_cast<int>(basic_.size());
      basic_.push_back(j);
    }
  }
  factor_valid_ = false;
}

template <class T>
Basis SimplexSolver<T>::basis() const {
  Basis b;
  b.basic = basic_;
  return b;
}

template <class T>
void SimplexSolver<T>::update_problem(std::vector<T> b, std::vector<T> c, std::vector<T> lower) {
  assert(static_cast<int>(b.size()) == m_ && static_cast<int>(c.size()) == n_ &&
         static_cast<int>(lower.size()) == n_);
  b_ = std::move(b);
  c_ = std::move(c);
  lower_ = std::move(lower);
  // Factorization still matches the basis; only values must be recomputed,
  // which solve() does up front.
}

template <class T>
void SimplexSolver<T>::gather_column(int var, std::vector<T>& out) const {
  out.assign(m_, FloatTraits<T>::zero(lp_->precision.bits));
  if (var >= n_) {
    out[var - n_] = FloatTraits<T>::from_double(1.0);
    return;
  }
  auto cv = lp_->A.col(var);
  for (int k = 0; k < cv.len; ++k) out[cv.rows[k]] = cv.vals[k];
}

template <class T>
bool SimplexSolver<T>::refactorize() {
  std::vector<T> colbuf;
  auto fill = [&](int pos, std::vector<T>& buf) { gather_column(basic_[pos], buf); };
  auto st = lu_.factorize(m_, fill, lp_->tolerances.pivot_eps, lp_->tolerances.zero_eps);
  etas_.clear();
  factor_valid_ = st == LuFactorization<T>::Status::kOk;
  return factor_valid_;
}

template <class T>
void SimplexSolver<T>::repair_basis() {
  // Replace dependent basis columns with logicals of the unpivoted rows.
  // Terminates: each round strictly increases the number of unit columns,
  // and the all-logical basis is the identity.
  while (!refactorize()) {
    const auto& rows = lu_.unpivoted_rows();
    const auto& cols = lu_.unpivoted_cols();
    assert(!cols.empty() && rows.size() == cols.size());
    bool changed = false;
    for (size_t k = 0; k < cols.size(); ++k) {
      int pos = cols[k];
      int replacement = n_ + rows[k];
      if (basic_[pos] == replacement) continue;
      if (pos_of_[replacement] >= 0) continue;  // already basic elsewhere
      pos_of_[basic_[pos]] = -1;
      basic_[pos] = replacement;
      pos_of_[replacement] = pos;
      changed = true;
    }
    if (!changed) {
      set_basis(Basis::logical(n_, m_));
      refactorize();
      return;
    }
  }
}

template <class T>
void SimplexSolver<T>::compute_basic_values() {
  std::vector<T> rhs = b_;
  for (int j = 0; j < n_; ++j) {
    if (pos_of_[j] >= 0) continue;
    if (LuScalar<T>::negligible(lower_[j], 0.0)) continue;
    auto cv = lp_->A.col(j);
    for (int k = 0; k < cv.len; ++k)
      FloatTraits<T>::sub_mul(rhs[cv.rows[k]], cv.vals[k], lower_[j]);
  }
  // Nonbasic logicals sit at 0 and contribute nothing.
  lu_.ftran(rhs);
  for (const auto& e : etas_) {
    T t = rhs[e.pos] / e.w[e.pos];
    for (int i = 0; i < m_; ++i)
      if (i != e.pos) FloatTraits<T>::sub_mul(rhs[i], e.w[i], t);
    rhs[e.pos] = std::move(t);
  }
  xb_ = std::move(rhs);
}

template <class T>
typename SimplexSolver<T>::Feas SimplexSolver<T>::classify(int pos) const {
  const double ftol = lp_->tolerances.feas_tol;
  int var = basic_[pos];
  if (var < n_) {
    T slack = xb_[pos] - lower_[var];
    return FloatTraits<T>::cmp(slack, -ftol) < 0 ? Feas::kBelow : Feas::kOk;
  }
  if (FloatTraits<T>::cmp(xb_[pos], -ftol) < 0) return Feas::kBelow;
  if (FloatTraits<T>::cmp(xb_[pos], ftol) > 0) return Feas::kAbove;
  return Feas::kOk;
}

template <class T>
int SimplexSolver<T>::ftran_checked(int var, std::vector<T>& w) {
  bool repaired = false;
  for (int attempt = 0; attempt < 2; ++attempt) {
    gather_column(var, w);
    std::vector<T> rhs = w;
    lu_.ftran(w);
    for (const auto& e : etas_) {
      T t = w[e.pos] / e.w[e.pos];
      for (int i = 0; i < m_; ++i)
        if (i != e.pos) FloatTraits<T>::sub_mul(w[i], e.w[i], t);
      w[e.pos] = std::move(t);
    }
    // Forward-error check of the update chain against the c=0.8 tolerance.
    std::vector<T> resid = rhs;
    T scale = FloatTraits<T>::from_double(1.0);
    for (int i = 0; i < m_; ++i) {
      T a = FloatTraits<T>::abs(rhs[i]);
      if (a > scale) scale = a;
    }
    for (int pos = 0; pos < m_; ++pos) {
      if (LuScalar<T>::negligible(w[pos], lp_->tolerances.zero_eps)) continue;
      int bvar = basic_[pos];
      if (bvar >= n_) {
        resid[bvar - n_] -= w[pos];
      } else {
        auto cv = lp_->A.col(bvar);
        for (int k = 0; k < cv.len; ++k)
          FloatTraits<T>::sub_mul(resid[cv.rows[k]], cv.vals[k], w[pos]);
      }
    }
    T worst = FloatTraits<T>::zero(lp_->precision.bits);
    for (int i = 0; i < m_; ++i) {
      T a = FloatTraits<T>::abs(resid[i]);
      if (a > worst) worst = a;
    }
    if (worst <= scale * FloatTraits<T>::from_double(lp_->tolerances.update_tol))
      return repaired ? 1 : 0;
    if (attempt == 0) {
      Basis before = basis();
      repair_basis();
      compute_basic_values();
      repaired = !(before == basis());
    }
  }
  return -1;
}

template <class T>
FpSolveOutcome<T> SimplexSolver<T>::solve(const SimplexLimits& limits) {
  FpSolveOutcome<T> out;
  const auto& tol = lp_->tolerances;
  const int bits = lp_->precision.bits;

  if (!factor_valid_) repair_basis();
  compute_basic_values();

  bool bland = false;
  long consecutive_nonimproving = 0;
  const long bland_trigger = 3L * (n_ + m_);
  std::vector<T> w, y, cb;

  for (;;) {
    if (out.iterations >= limits.max_pivots) {
      out.status = FpStatus::kIterationLimit;
      out.basis = basis();
      return out;
    }
    if (std::chrono::steady_clock::now() >= limits.deadline) {
      out.status = FpStatus::kTimeLimit;
      out.basis = basis();
      return out;
    }

    // Phase selection: any violated basic variable puts us in phase 1 with
    // the composite infeasibility gradient as objective.
    bool infeasible = false;
    cb.assign(m_, FloatTraits<T>::zero(bits));
    std::vector<int8_t> pattern(m_, 0);
    for (int pos = 0; pos < m_; ++pos) {
      Feas f = classify(pos);
      if (f == Feas::kBelow) {
        cb[pos] = FloatTraits<T>::from_double(-1.0);
        pattern[pos] = -1;
        infeasible = true;
      } else if (f == Feas::kAbove) {
        cb[pos] = FloatTraits<T>::from_double(1.0);
        pattern[pos] = 1;
        infeasible = true;
      }
    }
    if (!infeasible)
      for (int pos = 0; pos < m_; ++pos)
        cb[pos] = basic_[pos] < n_ ? c_[basic_[pos]] : FloatTraits<T>::zero(bits);

    y = cb;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      // transposed eta inverse: only the pivot position changes
      T s = FloatTraits<T>::zero(bits);
      for (int i = 0; i < m_; ++i)
        if (i != it->pos) FloatTraits<T>::add_mul(s, it->w[i], y[i]);
      y[it->pos] = (y[it->pos] - s) / it->w[it->pos];
    }
    lu_.btran(y);

    // Pricing over nonbasic structural columns (logicals never enter).
    int entering = -1;
    T best_d = FloatTraits<T>::zero(bits);
    for (int j = 0; j < n_; ++j) {
      if (pos_of_[j] >= 0) continue;
      T d = infeasible ? FloatTraits<T>::zero(bits) : c_[j];
      auto cv = lp_->A.col(j);
      for (int k = 0; k < cv.len; ++k) FloatTraits<T>::sub_mul(d, cv.vals[k], y[cv.rows[k]]);
      if (FloatTraits<T>::cmp(d, -tol.opt_tol) >= 0) continue;
      if (bland) {
        entering = j;
        break;
      }
      if (entering < 0 || d < best_d) {
        entering = j;
        best_d = d;
      }
    }

    if (entering < 0) {
      out.basis = basis();
      if (infeasible) {
        out.status = FpStatus::kInfeasible;
        out.farkas_ray = y;
        out.farkas_pattern = std::move(pattern);
        return out;
      }
      out.status = FpStatus::kOptimal;
      out.x.assign(n_, FloatTraits<T>::zero(bits));
      for (int j = 0; j < n_; ++j) out.x[j] = pos_of_[j] >= 0 ? xb_[pos_of_[j]] : lower_[j];
      out.y = y;  // phase-2 pricing duals
      return out;
    }

    int ft = ftran_checked(entering, w);
    if (ft < 0) {
      out.status = FpStatus::kNumericalFailure;
      out.basis = basis();
      return out;
    }
    if (ft == 1) continue;  // basis was repaired: price again

    // Ratio test. x_B moves at rate -w per unit of the entering variable.
    // Blocking events: feasible vars reaching their bound, infeasible ones
    // reaching feasibility, logicals leaving zero. Harris-style two passes:
    // relaxed minimum first, then the numerically largest pivot among the
    // qualifying candidates. Bland's rule takes the lowest variable index at
    // the exact minimum instead.
    struct Event {
      int pos;
      T ratio;
    };
    std::vector<Event> events;
    events.reserve(8);
    for (int pos = 0; pos < m_; ++pos) {
      int var = basic_[pos];
      const T& wp = w[pos];
      if (FloatTraits<T>::cmp_abs(wp, tol.pivot_eps) <= 0) continue;
      bool logical = var >= n_;
      Feas f = classify(pos);
      T gap = logical ? xb_[pos] : xb_[pos] - lower_[var];
      int wsgn = FloatTraits<T>::cmp(wp, 0.0);
      if (f == Feas::kOk) {
        if (!logical && wsgn < 0) continue;  // moving away from the bound
        // logicals block in either direction
        T r = gap / wp;
        if (FloatTraits<T>::cmp(r, 0.0) < 0) r = FloatTraits<T>::zero(bits);
        events.push_back({pos, std::move(r)});
      } else if (f == Feas::kBelow && wsgn < 0) {
        events.push_back({pos, gap / wp});
      } else if (f == Feas::kAbove && wsgn > 0) {
        events.push_back({pos, gap / wp});
      }
    }

    if (events.empty()) {
      out.basis = basis();
      if (!infeasible) {
        out.status = FpStatus::kUnbounded;
        out.unbounded_entering = entering;
        out.primal_ray.assign(n_, FloatTraits<T>::zero(bits));
        out.primal_ray[entering] = FloatTraits<T>::from_double(1.0);
        for (int pos = 0; pos < m_; ++pos)
          if (basic_[pos] < n_) out.primal_ray[basic_[pos]] = -w[pos];
        return out;
      }
      // Bounded phase-1 objective with an improving unblocked direction is
      // numerical nonsense; give up and let the caller escalate.
      out.status = FpStatus::kNumericalFailure;
      return out;
    }

    int chosen = -1;
    if (bland) {
      const T* tmin = nullptr;
      for (const auto& e : events)
        if (tmin == nullptr || e.ratio < *tmin) tmin = &e.ratio;
      for (const auto& e : events)
        if (!(e.ratio > *tmin) &&
            (chosen < 0 || basic_[e.pos] < basic_[events[chosen].pos])) {
          // lowest leaving variable index at the exact minimum
          chosen = static_cast<int>(&e - events.data());
        }
    } else {
      T relaxed_min = FloatTraits<T>::zero(bits);
      bool first = true;
      for (const auto& e : events) {
        T slack_tol = FloatTraits<T>::from_double(tol.feas_tol) / FloatTraits<T>::abs(w[e.pos]);
        T relaxed = e.ratio + slack_tol;
        if (first || relaxed < relaxed_min) {
          relaxed_min = std::move(relaxed);
          first = false;
        }
      }
      for (const auto& e : events) {
        if (e.ratio > relaxed_min) continue;
        if (chosen < 0 ||
            FloatTraits<T>::abs(w[e.pos]) > FloatTraits<T>::abs(w[events[chosen].pos]))
          chosen = static_cast<int>(&e - events.data());
      }
    }
    assert(chosen >= 0);
    const int leave_pos = events[chosen].pos;
    const int leave_var = basic_[leave_pos];
    T step = events[chosen].ratio;
    if (FloatTraits<T>::cmp(step, 0.0) < 0) step = FloatTraits<T>::zero(bits);

    // Apply the pivot.
    for (int pos = 0; pos < m_; ++pos)
      if (pos != leave_pos) FloatTraits<T>::sub_mul(xb_[pos], w[pos], step);
    T enter_value = lower_[entering] + step;
    pos_of_[leave_var] = -1;
    pos_of_[entering] = leave_pos;
    basic_[leave_pos] = entering;
    xb_[leave_pos] = std::move(enter_value);

    etas_.push_back({leave_pos, w});
    ++out.iterations;
    ++pivots_total_;
    if (pivot_trace != nullptr) pivot_trace->emplace_back(entering, leave_var);
    if (snapshot_policy(pivots_total_, last_snapshot_iter_)) {
      last_snapshot_iter_ = pivots_total_;
      snapshots_.emplace_back(pivots_total_, basis());
      if (snapshots_.size() > kMaxSnapshots) snapshots_.erase(snapshots_.begin() + 1);
    }

    bool improving = FloatTraits<T>::cmp(step, 0.0) > 0;
    if (improving) {
      consecutive_nonimproving = 0;
      bland = false;
    } else if (++consecutive_nonimproving >= bland_trigger) {
      bland = true;
    }

    if (static_cast<long>(etas_.size()) >= 100) {
      if (!refactorize()) repair_basis();
      compute_basic_values();
    }
  }
}

template class SimplexSolver<double>;
template class SimplexSolver<BigFloat>;

}  // namespace exactlp
