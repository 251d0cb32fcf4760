#include "polycalc/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace polycalc {

namespace {

// Dense two-phase primal simplex on the standard form
//     min c~^T z   s.t.  R z = rhs,  z >= 0
// built from min g^T x, A x <= b, C x = d via x = xp - xm and slacks:
// columns are [xp (n) | xm (n) | s (m1) | artificials (m)], rows are the
// inequalities then the equalities, each scaled by sigma_i = +-1 so that
// rhs >= 0.  Artificial columns start as the identity, so after any pivot
// sequence column art_r holds B^{-1} e_r; the duals y = c_B^T B^{-1} are
// read off the reduced-cost row there.  Bland's rule (lowest eligible
// column enters, lowest basic variable leaves on ties) guarantees
// termination; artificials never re-enter the basis.
class Simplex {
public:
    Simplex(const Vec& g, const HPoly& p)
        : n_(static_cast<std::size_t>(p.dim)),
          m1_(p.ineqs.size()),
          m_(p.ineqs.size() + p.eqs.size()),
          ncols_(2 * n_ + m1_ + m_),
          tab_(m_, std::vector<Rat>(ncols_ + 1, Rat(0))),
          cost_(ncols_, Rat(0)),
          red_(ncols_ + 1, Rat(0)),
          basis_(m_, 0),
          sigma_(m_, Rat(1)) {
        for (std::size_t i = 0; i < m_; ++i) {
            const LinCon& row = i < m1_ ? p.ineqs[i] : p.eqs[i - m1_];
            if (row.b < 0) sigma_[i] = -1;
            for (std::size_t j = 0; j < n_; ++j) {
                tab_[i][j] = sigma_[i] * row.a[j];
                tab_[i][n_ + j] = -tab_[i][j];
            }
            if (i < m1_) tab_[i][2 * n_ + i] = sigma_[i];
            tab_[i][art_col(i)] = 1;
            tab_[i][ncols_] = sigma_[i] * row.b;
            basis_[i] = (i < m1_ && sigma_[i] > 0) ? 2 * n_ + i : art_col(i);
        }
        for (std::size_t j = 0; j < n_; ++j) {
            cost_[j] = g[j];
            cost_[n_ + j] = -g[j];
        }
    }

    // Returns false when the constraints are infeasible.
    bool phase1() {
        std::vector<Rat> c1(ncols_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) c1[art_col(i)] = 1;
        reset_costs(c1);
        if (iterate() != Step::OptimalReached)
            throw std::logic_error("phase-1 objective cannot be unbounded");
        if (objective() != 0) return false;
        // Drive leftover artificials out of the basis where possible; rows
        // with no real nonzero entry are redundant and stay pinned at zero.
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < real_cols()) continue;
            for (std::size_t j = 0; j < real_cols(); ++j) {
                if (tab_[r][j] != 0) { pivot(r, j); break; }
            }
        }
        return true;
    }

    // Returns true when an optimum exists, false when unbounded (then
    // unbounded_ray() applies).
    bool phase2() {
        reset_costs(cost_);
        Step s = iterate();
        return s == Step::OptimalReached;
    }

    Rat objective() const {
        Rat v = 0;
        for (std::size_t i = 0; i < m_; ++i) v += current_cost_[basis_[i]] * tab_[i][ncols_];
        return v;
    }

    Vec solution() const {
        Vec x(n_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_)
                x[basis_[i]] += tab_[i][ncols_];
            else if (basis_[i] < 2 * n_)
                x[basis_[i] - n_] -= tab_[i][ncols_];
        }
        return x;
    }

    // Multipliers lambda = -sigma .* y for the active cost row; see lp.hpp
    // for the conditions they certify.
    Vec multipliers() const {
        Vec lam(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rat y = current_cost_[art_col(i)] - red_[art_col(i)];
            lam[i] = -sigma_[i] * y;
        }
        return lam;
    }

    Vec unbounded_ray() const {
        Vec r(n_, Rat(0));
        if (enter_col_ < n_)
            r[enter_col_] += 1;
        else if (enter_col_ < 2 * n_)
            r[enter_col_ - n_] -= 1;
        for (std::size_t i = 0; i < m_; ++i) {
            Rat delta = -tab_[i][enter_col_];
            if (delta == 0) continue;
            if (basis_[i] < n_)
                r[basis_[i]] += delta;
            else if (basis_[i] < 2 * n_)
                r[basis_[i] - n_] -= delta;
        }
        return r;
    }

private:
    enum class Step { OptimalReached, Unbounded };

    std::size_t art_col(std::size_t i) const { return 2 * n_ + m1_ + i; }
    std::size_t real_cols() const { return 2 * n_ + m1_; }

    void reset_costs(const std::vector<Rat>& c) {
        current_cost_ = c;
        for (std::size_t j = 0; j <= ncols_; ++j) {
            Rat z = j < ncols_ ? c[j] : Rat(0);
            for (std::size_t i = 0; i < m_; ++i) {
                const Rat& cb = c[basis_[i]];
                if (cb != 0 && tab_[i][j] != 0) z -= cb * tab_[i][j];
            }
            red_[j] = z;
        }
    }

    void pivot(std::size_t r, std::size_t j) {
        Rat inv = Rat(1) / tab_[r][j];
        for (auto& v : tab_[r]) v *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || tab_[i][j] == 0) continue;
            Rat f = tab_[i][j];
            for (std::size_t k = 0; k <= ncols_; ++k)
                if (tab_[r][k] != 0) tab_[i][k] -= f * tab_[r][k];
        }
        if (red_[j] != 0) {
            Rat f = red_[j];
            for (std::size_t k = 0; k <= ncols_; ++k)
                if (tab_[r][k] != 0) red_[k] -= f * tab_[r][k];
        }
        basis_[r] = j;
    }

    Step iterate() {
        for (long guard = 0;; ++guard) {
            if (guard > 1000000) throw std::logic_error("simplex failed to terminate");
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < real_cols(); ++j) {
                if (red_[j] < 0) { enter = j; break; }
            }
            if (enter == ncols_) return Step::OptimalReached;
            std::size_t leave = m_;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rat ratio = tab_[i][ncols_] / tab_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m_) { enter_col_ = enter; return Step::Unbounded; }
            pivot(leave, enter);
        }
    }

    std::size_t n_, m1_, m_, ncols_;
    std::vector<std::vector<Rat>> tab_;
    std::vector<Rat> cost_;          // phase-2 cost vector
    std::vector<Rat> current_cost_;  // cost vector behind red_
    std::vector<Rat> red_;           // reduced costs
    std::vector<std::size_t> basis_;
    std::vector<Rat> sigma_;
    std::size_t enter_col_ = 0;
};

} // namespace

LPResult lp_solve(const Vec& objective, Sense sense, const HPoly& p) {
    p.validate();
    check_dim(objective, static_cast<std::size_t>(p.dim), "lp objective");
    Vec g = sense == Sense::Min ? objective : neg(objective);

    Simplex s(g, p);
    LPResult res;
    if (!s.phase1()) {
        res.status = LPStatus::Infeasible;
        res.farkas = s.multipliers();
        return res;
    }
    if (!s.phase2()) {
        res.status = LPStatus::Unbounded;
        res.point = s.solution();
        res.ray = s.unbounded_ray();
        return res;
    }
    res.status = LPStatus::Optimal;
    res.point = s.solution();
    res.dual = s.multipliers();
    Rat v = s.objective();
    res.value = sense == Sense::Min ? v : -v;
    return res;
}

bool lp_certificate_ok(const Vec& objective, Sense sense, const HPoly& p,
                       const LPResult& res) {
    const std::size_t m1 = p.ineqs.size(), m = m1 + p.eqs.size();
    Vec g = sense == Sense::Min ? objective : neg(objective);
    auto combine = [&](const Vec& mult, Vec& lin, Rat& rhs) {
        lin = zero_vec(p.dim);
        rhs = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const LinCon& row = i < m1 ? p.ineqs[i] : p.eqs[i - m1];
            if (i < m1 && mult[i] < 0) return false;
            lin = add(lin, scale(mult[i], row.a));
            rhs += mult[i] * row.b;
        }
        return true;
    };

    switch (res.status) {
    case LPStatus::Optimal: {
        if (!contains(p, res.point)) return false;
        if (res.dual.size() != m) return false;
        Vec lin; Rat rhs;
        if (!combine(res.dual, lin, rhs)) return false;
        if (!is_zero(add(g, lin))) return false;
        Rat gval = dot(g, res.point);
        if (gval != -rhs) return false;
        Rat reported = sense == Sense::Min ? res.value : -res.value;
        return reported == gval;
    }
    case LPStatus::Infeasible: {
        if (res.farkas.size() != m) return false;
        Vec lin; Rat rhs;
        if (!combine(res.farkas, lin, rhs)) return false;
        return is_zero(lin) && rhs < 0;
    }
    case LPStatus::Unbounded: {
        if (!contains(p, res.point)) return false;
        if (!in_recession_cone(p, res.ray)) return false;
        return dot(g, res.ray) < 0;
    }
    }
    return false;
}

} // namespace polycalc
