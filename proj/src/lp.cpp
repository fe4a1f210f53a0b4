#include "fairdist/lp.hpp"

#include <stdexcept>
#include <utility>

namespace fairdist {

int LinearProgram::add_variable(Rational obj, std::optional<Rational> lo,
                                std::optional<Rational> hi) {
    objective.push_back(std::move(obj));
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    for (auto& row : rows) row.coeffs.emplace_back(0);
    return num_vars() - 1;
}

void LinearProgram::add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != num_vars())
        throw std::invalid_argument("lp row width mismatch");
    rows.push_back(LpRow{std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// How one user variable maps into the nonnegative internal form.
struct VarMap {
    enum Kind { Shifted, Mirrored, Split } kind = Shifted;
    int col = -1;      // internal column
    int col_neg = -1;  // negative part (Split only)
    Rational shift;    // lower bound (Shifted) or upper bound (Mirrored)
};

struct InternalRow {
    std::vector<Rational> a;
    Relation rel = Relation::Eq;
    Rational rhs;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    const int nv = lp.num_vars();
    const int nr = lp.num_rows();
    for (const auto& row : lp.rows)
        if (static_cast<int>(row.coeffs.size()) != nv)
            throw std::invalid_argument("lp row width mismatch");

    LpSolution out;
    const bool minimize = lp.sense == Sense::Minimize;

    for (int j = 0; j < nv; ++j)
        if (lp.lower[j] && lp.upper[j] && *lp.lower[j] > *lp.upper[j]) {
            out.status = LpStatus::Infeasible;  // bound contradiction; no row certificate
            return out;
        }

    // --- Variable normalization: every internal column is >= 0. ---
    std::vector<VarMap> vmap(nv);
    int nstruct = 0;
    for (int j = 0; j < nv; ++j) {
        if (lp.lower[j]) {
            vmap[j] = VarMap{VarMap::Shifted, nstruct++, -1, *lp.lower[j]};
        } else if (lp.upper[j]) {
            vmap[j] = VarMap{VarMap::Mirrored, nstruct++, -1, *lp.upper[j]};
        } else {
            vmap[j].kind = VarMap::Split;
            vmap[j].col = nstruct++;
            vmap[j].col_neg = nstruct++;
        }
    }

    std::vector<Rational> icost(nstruct, Rational(0));
    Rational obj_const(0);
    for (int j = 0; j < nv; ++j) {
        Rational c = minimize ? Rational(-lp.objective[j]) : lp.objective[j];
        if (c == 0) continue;
        switch (vmap[j].kind) {
            case VarMap::Shifted:
                icost[vmap[j].col] += c;
                obj_const += c * vmap[j].shift;
                break;
            case VarMap::Mirrored:
                icost[vmap[j].col] -= c;
                obj_const += c * vmap[j].shift;
                break;
            case VarMap::Split:
                icost[vmap[j].col] += c;
                icost[vmap[j].col_neg] -= c;
                break;
        }
    }

    std::vector<InternalRow> irows;
    irows.reserve(nr + nv);
    for (int i = 0; i < nr; ++i) {
        InternalRow r{std::vector<Rational>(nstruct, Rational(0)), lp.rows[i].rel,
                      lp.rows[i].rhs};
        for (int j = 0; j < nv; ++j) {
            const Rational& a = lp.rows[i].coeffs[j];
            if (a == 0) continue;
            switch (vmap[j].kind) {
                case VarMap::Shifted:
                    r.a[vmap[j].col] += a;
                    r.rhs -= a * vmap[j].shift;
                    break;
                case VarMap::Mirrored:
                    r.a[vmap[j].col] -= a;
                    r.rhs -= a * vmap[j].shift;
                    break;
                case VarMap::Split:
                    r.a[vmap[j].col] += a;
                    r.a[vmap[j].col_neg] -= a;
                    break;
            }
        }
        irows.push_back(std::move(r));
    }
    // Finite upper bounds of shifted variables become explicit rows.
    for (int j = 0; j < nv; ++j) {
        if (vmap[j].kind == VarMap::Shifted && lp.upper[j]) {
            InternalRow r{std::vector<Rational>(nstruct, Rational(0)), Relation::Le,
                          Rational(*lp.upper[j] - vmap[j].shift)};
            r.a[vmap[j].col] = 1;
            irows.push_back(std::move(r));
        }
    }

    const int mrows = static_cast<int>(irows.size());
    std::vector<int> row_sign(mrows, 1);
    for (int i = 0; i < mrows; ++i) {
        if (irows[i].rhs < 0) {
            row_sign[i] = -1;
            for (auto& a : irows[i].a) a = -a;
            irows[i].rhs = -irows[i].rhs;
            if (irows[i].rel == Relation::Le)
                irows[i].rel = Relation::Ge;
            else if (irows[i].rel == Relation::Ge)
                irows[i].rel = Relation::Le;
        }
    }

    // --- Tableau: structural | slack/surplus | artificial | rhs. ---
    int ncols = nstruct;
    std::vector<int> slack_col(mrows, -1), art_col(mrows, -1);
    for (int i = 0; i < mrows; ++i)
        if (irows[i].rel != Relation::Eq) slack_col[i] = ncols++;
    const int first_art = ncols;
    for (int i = 0; i < mrows; ++i)
        if (irows[i].rel != Relation::Le) art_col[i] = ncols++;

    std::vector<std::vector<Rational>> T(mrows, std::vector<Rational>(ncols + 1, Rational(0)));
    std::vector<int> basis(mrows, -1);
    for (int i = 0; i < mrows; ++i) {
        for (int j = 0; j < nstruct; ++j) T[i][j] = irows[i].a[j];
        if (slack_col[i] >= 0) T[i][slack_col[i]] = irows[i].rel == Relation::Le ? 1 : -1;
        if (art_col[i] >= 0) T[i][art_col[i]] = 1;
        T[i][ncols] = irows[i].rhs;
        basis[i] = art_col[i] >= 0 ? art_col[i] : slack_col[i];
    }
    // Rows never start without a basic column: Le rows own a slack, others an
    // artificial.

    std::vector<Rational> obj(ncols, Rational(0));
    Rational objval(0);

    auto recompute_obj = [&](const std::vector<Rational>& c) {
        objval = 0;
        for (int j = 0; j < ncols; ++j) obj[j] = c[j];
        for (int i = 0; i < mrows; ++i) {
            const Rational& cb = c[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j < ncols; ++j) {
                if (T[i][j] == 0) continue;
                obj[j] -= cb * T[i][j];
            }
            objval += cb * T[i][ncols];
        }
    };

    auto pivot = [&](int r, int jc) {
        Rational piv = T[r][jc];
        for (int j = 0; j <= ncols; ++j) {
            if (T[r][j] == 0) continue;
            T[r][j] /= piv;
        }
        for (int i = 0; i < mrows; ++i) {
            if (i == r) continue;
            Rational f = T[i][jc];
            if (f == 0) continue;
            for (int j = 0; j <= ncols; ++j) {
                if (T[r][j] == 0) continue;
                T[i][j] -= f * T[r][j];
            }
        }
        Rational f = obj[jc];
        if (f != 0) {
            for (int j = 0; j < ncols; ++j) {
                if (T[r][j] == 0) continue;
                obj[j] -= f * T[r][j];
            }
            objval += f * T[r][ncols];
        }
        basis[r] = jc;
    };

    // Bland's rule: least-index entering column with positive reduced cost;
    // among min-ratio rows, the one whose basic variable has least index.
    // Returns false on an unbounded ray.
    auto run_simplex = [&](int entering_limit) -> bool {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < entering_limit; ++j)
                if (obj[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < mrows; ++i) {
                if (T[i][enter] > 0) {
                    Rational ratio = T[i][ncols] / T[i][enter];
                    if (leave < 0 || ratio < best ||
                        (ratio == best && basis[i] < basis[leave])) {
                        leave = i;
                        best = ratio;
                    }
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    };

    // Reads y_i = c_B^T B^-1 e_i off the column that started as e_i.
    auto extract_row_multipliers = [&](const std::vector<Rational>& c) {
        std::vector<Rational> y(mrows, Rational(0));
        for (int i = 0; i < mrows; ++i) {
            int reader = art_col[i] >= 0 ? art_col[i] : slack_col[i];
            Rational v(0);
            for (int k = 0; k < mrows; ++k) {
                const Rational& cb = c[basis[k]];
                if (cb == 0 || T[k][reader] == 0) continue;
                v += cb * T[k][reader];
            }
            y[i] = v;
        }
        return y;
    };

    const bool have_art = first_art < ncols;
    if (have_art) {
        std::vector<Rational> c1(ncols, Rational(0));
        for (int i = 0; i < mrows; ++i)
            if (art_col[i] >= 0) c1[art_col[i]] = -1;
        recompute_obj(c1);
        if (!run_simplex(ncols)) throw std::logic_error("phase-one unbounded");
        if (objval < 0) {
            out.status = LpStatus::Infeasible;
            std::vector<Rational> y = extract_row_multipliers(c1);
            out.farkas.resize(nr);
            for (int i = 0; i < nr; ++i)
                out.farkas[i] = row_sign[i] == 1 ? y[i] : Rational(-y[i]);
            return out;
        }
        // Drive basic artificials out; rows where that is impossible are
        // linearly dependent and stay pinned at zero.
        for (int i = 0; i < mrows; ++i) {
            if (basis[i] >= first_art) {
                for (int j = 0; j < first_art; ++j) {
                    if (T[i][j] != 0) {
                        pivot(i, j);
                        break;
                    }
                }
            }
        }
    }

    std::vector<Rational> c2(ncols, Rational(0));
    for (int j = 0; j < nstruct; ++j) c2[j] = icost[j];
    recompute_obj(c2);
    if (!run_simplex(first_art)) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    out.status = LpStatus::Optimal;
    Rational value = objval + obj_const;
    out.objective = minimize ? Rational(-value) : value;

    std::vector<Rational> xhat(nstruct, Rational(0));
    for (int i = 0; i < mrows; ++i)
        if (basis[i] < nstruct) xhat[basis[i]] = T[i][ncols];
    out.primal.resize(nv);
    for (int j = 0; j < nv; ++j) {
        switch (vmap[j].kind) {
            case VarMap::Shifted:
                out.primal[j] = vmap[j].shift + xhat[vmap[j].col];
                break;
            case VarMap::Mirrored:
                out.primal[j] = vmap[j].shift - xhat[vmap[j].col];
                break;
            case VarMap::Split:
                out.primal[j] = xhat[vmap[j].col] - xhat[vmap[j].col_neg];
                break;
        }
    }

    std::vector<Rational> y = extract_row_multipliers(c2);
    out.dual.resize(nr);
    for (int i = 0; i < nr; ++i) {
        Rational d = row_sign[i] == 1 ? y[i] : Rational(-y[i]);
        out.dual[i] = minimize ? Rational(-d) : d;
    }
    return out;
}

bool verify_certificate(const LinearProgram& lp, const LpSolution& sol) {
    const int nv = lp.num_vars();
    const int nr = lp.num_rows();
    if (sol.status != LpStatus::Optimal) return false;
    if (static_cast<int>(sol.primal.size()) != nv) return false;
    if (static_cast<int>(sol.dual.size()) != nr) return false;

    for (int j = 0; j < nv; ++j) {
        if (lp.lower[j] && sol.primal[j] < *lp.lower[j]) return false;
        if (lp.upper[j] && sol.primal[j] > *lp.upper[j]) return false;
    }
    for (int i = 0; i < nr; ++i) {
        Rational lhs(0);
        for (int j = 0; j < nv; ++j) {
            if (lp.rows[i].coeffs[j] == 0) continue;
            lhs += lp.rows[i].coeffs[j] * sol.primal[j];
        }
        switch (lp.rows[i].rel) {
            case Relation::Eq:
                if (lhs != lp.rows[i].rhs) return false;
                break;
            case Relation::Le:
                if (lhs > lp.rows[i].rhs) return false;
                break;
            case Relation::Ge:
                if (lhs < lp.rows[i].rhs) return false;
                break;
        }
    }
    Rational primal_obj(0);
    for (int j = 0; j < nv; ++j) {
        if (lp.objective[j] == 0) continue;
        primal_obj += lp.objective[j] * sol.primal[j];
    }
    if (primal_obj != sol.objective) return false;

    // Normalize to Maximize and check dual feasibility + strong duality.
    const bool minimize = lp.sense == Sense::Minimize;
    std::vector<Rational> ymax(nr);
    for (int i = 0; i < nr; ++i) ymax[i] = minimize ? Rational(-sol.dual[i]) : sol.dual[i];
    for (int i = 0; i < nr; ++i) {
        if (lp.rows[i].rel == Relation::Le && ymax[i] < 0) return false;
        if (lp.rows[i].rel == Relation::Ge && ymax[i] > 0) return false;
    }
    Rational dual_obj(0);
    for (int i = 0; i < nr; ++i) {
        if (ymax[i] == 0) continue;
        dual_obj += ymax[i] * lp.rows[i].rhs;
    }
    for (int j = 0; j < nv; ++j) {
        Rational d = minimize ? Rational(-lp.objective[j]) : lp.objective[j];
        for (int i = 0; i < nr; ++i) {
            if (ymax[i] == 0 || lp.rows[i].coeffs[j] == 0) continue;
            d -= ymax[i] * lp.rows[i].coeffs[j];
        }
        if (d > 0) {
            if (!lp.upper[j]) return false;  // positive reduced cost must pin an upper bound
            dual_obj += d * *lp.upper[j];
        } else if (d < 0) {
            if (!lp.lower[j]) return false;  // negative reduced cost must pin a lower bound
            dual_obj += d * *lp.lower[j];
        }
    }
    Rational objmax = minimize ? Rational(-sol.objective) : sol.objective;
    return dual_obj == objmax;
}

bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& farkas) {
    const int nv = lp.num_vars();
    const int nr = lp.num_rows();
    if (static_cast<int>(farkas.size()) != nr) return false;
    for (int i = 0; i < nr; ++i) {
        if (lp.rows[i].rel == Relation::Le && farkas[i] < 0) return false;
        if (lp.rows[i].rel == Relation::Ge && farkas[i] > 0) return false;
    }
    // Aggregate: <t, x> <= s follows from the rows; show the box forbids it.
    Rational s(0);
    for (int i = 0; i < nr; ++i) {
        if (farkas[i] == 0) continue;
        s += farkas[i] * lp.rows[i].rhs;
    }
    Rational boxmin(0);
    for (int j = 0; j < nv; ++j) {
        Rational t(0);
        for (int i = 0; i < nr; ++i) {
            if (farkas[i] == 0 || lp.rows[i].coeffs[j] == 0) continue;
            t += farkas[i] * lp.rows[i].coeffs[j];
        }
        if (t > 0) {
            if (!lp.lower[j]) return false;  // min would be -inf
            boxmin += t * *lp.lower[j];
        } else if (t < 0) {
            if (!lp.upper[j]) return false;
            boxmin += t * *lp.upper[j];
        }
    }
    return boxmin > s;
}

}  // namespace fairdist
