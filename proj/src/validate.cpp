#include "tft/calculus.hpp"

namespace tft {

namespace {

void note(ValidationReport& rep, const std::string& fam, double res, const std::string& what) {
    auto& cur = rep.family_residual[fam];
    if (res > cur) {
        cur = res;
        rep.worst.push_back({fam, res, what});
    }
}

bool all_blocks_invertible(const FusionCat& c) {
    for (auto& [k, blk] : c.fb)
        if (!blk.invertible) return false;
    return true;
}

/* braiding of a single letter past a word, (a).u -> u.(a), through the
   charge decomposition of u */
WordOp braid_left(const FusionCat& c, int a, const Word& u) {
    WordOp op;
    op.win = concat({a}, u);
    op.wout = concat(u, {a});
    for (int e = 0; e < c.rank(); ++e) {
        int din = hom_dim(c, e, op.win);
        if (!din) continue;
        auto ein = adapted_basis(c, e, {a}, u);
        auto eout = adapted_basis(c, e, u, {a});
        Mat M = Mat::Zero(eout.size(), ein.size());
        for (int col = 0; col < (int)ein.size(); ++col) {
            const auto& g = ein[col];
            Mat Rt = c.rblock(a, g.z, e).transpose();
            for (int row = 0; row < (int)eout.size(); ++row) {
                const auto& h = eout[row];
                if (h.a != g.z || h.z != a || h.i != g.j) continue;
                M(row, col) = Rt(h.mu, g.mu);
            }
        }
        op.sec[e] = split_u(c, e, u, {a}) * M * split_u_inv(c, e, {a}, u);
    }
    return op;
}

/* (u).(a) -> (a).(u) braiding the word past the letter */
WordOp braid_right(const FusionCat& c, const Word& u, int a) {
    WordOp op;
    op.win = concat(u, {a});
    op.wout = concat({a}, u);
    for (int e = 0; e < c.rank(); ++e) {
        int din = hom_dim(c, e, op.win);
        if (!din) continue;
        auto ein = adapted_basis(c, e, u, {a});
        auto eout = adapted_basis(c, e, {a}, u);
        Mat M = Mat::Zero(eout.size(), ein.size());
        for (int col = 0; col < (int)ein.size(); ++col) {
            const auto& g = ein[col];
            Mat Rt = c.rblock(g.a, a, e).transpose();
            for (int row = 0; row < (int)eout.size(); ++row) {
                const auto& h = eout[row];
                if (h.a != a || h.z != g.a || h.j != g.i) continue;
                M(row, col) = Rt(h.mu, g.mu);
            }
        }
        op.sec[e] = split_u(c, e, {a}, u) * M * split_u_inv(c, e, u, {a});
    }
    return op;
}

void check_pivotal_rotation(const FusionCat& c, ValidationReport& rep) {
    rep.family_residual.emplace("pivotal", 0.0);
    note(rep, "pivotal", std::abs(c.pivotal[0] - cplx(1)), "t of the unit");
    auto full_turn = [&](const Word& w) {
        int d = hom_dim(c, 0, w);
        if (!d) return;
        Mat R = Mat::Identity(d, d);
        Word cur = w;
        for (size_t k = 0; k < w.size(); ++k) {
            R = rotate_closed(c, cur) * R;
            cur.push_back(cur.front());
            cur.erase(cur.begin());
        }
        note(rep, "pivotal", max_abs(Mat(R - Mat::Identity(d, d))),
             "full rotation differs from identity on a closed word");
    };
    for (int i = 0; i < c.rank(); ++i) full_turn({i, c.dual[i]});
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j)
            for (int k = 0; k < c.rank(); ++k)
                if (hom_dim(c, 0, {i, j, k})) full_turn({i, j, k});
}

void check_hexagon(const FusionCat& c, ValidationReport& rep) {
    if (!c.braided) return;
    rep.family_residual.emplace("hexagon", 0.0);
    for (int a = 0; a < c.rank(); ++a)
        for (int b = 0; b < c.rank(); ++b)
            for (int d = 0; d < c.rank(); ++d) {
                Word u{b, d};
                WordOp lhs1 = braid_left(c, a, u);
                WordOp rhs1 = compose(c, tensor(c, id_op(c, {b}), braid_op(c, a, d)),
                                      tensor(c, braid_op(c, a, b), id_op(c, {d})));
                note(rep, "hexagon", op_distance(c, lhs1, rhs1),
                     "braiding past a pair vs two crossings");
                Word v{a, b};
                WordOp lhs2 = braid_right(c, v, d);
                WordOp rhs2 = compose(c, tensor(c, braid_op(c, a, d), id_op(c, {b})),
                                      tensor(c, id_op(c, {a}), braid_op(c, b, d)));
                note(rep, "hexagon", op_distance(c, lhs2, rhs2),
                     "pair past a letter vs two crossings");
            }
}

}  // namespace

ValidationReport validate(const FusionCat& c) {
    ValidationReport rep;
    check_fusion_ring(c, rep);
    check_unit_gauge(c, rep);
    check_duality(c, rep);
    check_pentagon(c, rep);
    check_spherical(c, rep);
    check_ribbon_data(c, rep);
    if (c.strict_ok && all_blocks_invertible(c)) {
        check_pivotal_rotation(c, rep);
        check_hexagon(c, rep);
    }
    return rep;
}

}  // namespace tft
