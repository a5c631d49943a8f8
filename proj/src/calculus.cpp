#include "tft/calculus.hpp"

#include <memory>
#include <tuple>

namespace tft {

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word dual_reversed(const FusionCat& c, const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(c.dual[*it]);
    return out;
}

/* ---------------- fusion-tree bases ---------------- */

int hom_dim(const FusionCat& c, int charge, const Word& w) {
    c.require_strict();
    const int r = c.rank();
    if (w.empty()) return charge == 0 ? 1 : 0;
    std::vector<long> v(r, 0);
    v[w[0]] = 1;
    for (size_t t = 1; t < w.size(); ++t) {
        std::vector<long> nv(r, 0);
        for (int z = 0; z < r; ++z) {
            if (!v[z]) continue;
            for (int zp = 0; zp < r; ++zp) nv[zp] += v[z] * c.N(z, w[t], zp);
        }
        v.swap(nv);
    }
    return (int)v[charge];
}

namespace {

struct BasisData {
    std::vector<LCTree> trees;
    std::map<LCTree, int> index;
};

using BasisKey = std::tuple<uint64_t, int, Word>;
using SplitKey = std::tuple<uint64_t, int, Word, Word>;

thread_local std::map<BasisKey, std::shared_ptr<BasisData>> g_basis_cache;
thread_local std::map<SplitKey, std::shared_ptr<std::pair<Mat, Mat>>> g_split_cache;

void gen_trees(const FusionCat& c, const Word& w, int charge,
               const std::vector<std::vector<char>>& reach, LCTree& cur, size_t t,
               std::vector<LCTree>& out) {
    const size_t n = w.size();
    if (t == n) {
        if (cur.spine.back() == charge) out.push_back(cur);
        return;
    }
    int prev = cur.spine.back();
    for (int z = 0; z < c.rank(); ++z) {
        int mult = c.N(prev, w[t], z);
        if (!mult || !reach[t][z]) continue;
        for (int mu = 0; mu < mult; ++mu) {
            cur.spine.push_back(z);
            cur.mult.push_back(mu);
            gen_trees(c, w, charge, reach, cur, t + 1, out);
            cur.spine.pop_back();
            cur.mult.pop_back();
        }
    }
}

const BasisData& basis_data(const FusionCat& c, int charge, const Word& w) {
    c.require_strict();
    BasisKey key{c.uid, charge, w};
    auto it = g_basis_cache.find(key);
    if (it != g_basis_cache.end()) return *it->second;
    auto bd = std::make_shared<BasisData>();
    const size_t n = w.size();
    if (n == 0) {
        if (charge == 0) bd->trees.push_back(LCTree{});
    } else {
        /* reach[t][z]: spine value z at position t can still end at `charge` */
        std::vector<std::vector<char>> reach(n, std::vector<char>(c.rank(), 0));
        reach[n - 1][charge] = 1;
        for (size_t t = n - 1; t > 0; --t)
            for (int z = 0; z < c.rank(); ++z) {
                if (reach[t - 1][z]) continue;
                for (int zp = 0; zp < c.rank(); ++zp)
                    if (c.N(z, w[t], zp) > 0 && reach[t][zp]) {
                        reach[t - 1][z] = 1;
                        break;
                    }
            }
        if (reach[0][w[0]]) {
            LCTree cur;
            cur.spine.push_back(w[0]);
            gen_trees(c, w, charge, reach, cur, 1, bd->trees);
        }
    }
    for (int i = 0; i < (int)bd->trees.size(); ++i) bd->index[bd->trees[i]] = i;
    auto& slot = g_basis_cache[key];
    slot = std::move(bd);
    return *slot;
}

/* Expand the two-subtree composite
     (X on wA rooted at a) (x) (Y on wB rooted at z), joined by vertex
     (a,z;c)_mu, into left-comb coordinates on wA.wB.
   Recursive peeling of the last letter of wB through inverse F-moves. */
void attach(const FusionCat& c, int charge, int mu, int a, const LCTree& X, const Word& wA,
            int z, const LCTree& Y, const Word& wB, cplx coeff, std::map<LCTree, cplx>& acc) {
    if (coeff == cplx(0)) return;
    if (wB.empty()) {
        if (charge != a || z != 0 || mu != 0)
            throw std::logic_error("attach: malformed unit join");
        acc[X] += coeff;
        return;
    }
    if (wA.empty()) {
        if (charge != z || a != 0 || mu != 0)
            throw std::logic_error("attach: malformed unit join");
        acc[Y] += coeff;
        return;
    }
    if (wB.size() == 1) {
        LCTree t = X;
        t.spine.push_back(charge);
        t.mult.push_back(mu);
        acc[t] += coeff;
        return;
    }
    const size_t nb = wB.size();
    int y = wB.back();
    int zp = Y.spine[nb - 2];
    int nu = Y.mult[nb - 2];
    LCTree Yp;
    Yp.spine.assign(Y.spine.begin(), Y.spine.end() - 1);
    Yp.mult.assign(Y.mult.begin(), Y.mult.end() - 1);
    Word wBp(wB.begin(), wB.end() - 1);
    const FBlock& blk = c.fblock(a, zp, y, charge);
    if (!blk.invertible) throw std::runtime_error("attach: singular F-block");
    int finv_row = blk.col_of.at({z, nu, mu});
    for (int ridx = 0; ridx < (int)blk.rows.size(); ++ridx) {
        auto [m, al, be] = blk.rows[ridx];
        cplx w = coeff * blk.Finv(finv_row, ridx);
        if (w == cplx(0)) continue;
        std::map<LCTree, cplx> sub;
        attach(c, m, al, a, X, wA, zp, Yp, wBp, w, sub);
        for (auto& [t, cv] : sub) {
            LCTree ext = t;
            ext.spine.push_back(charge);
            ext.mult.push_back(be);
            acc[ext] += cv;
        }
    }
}

const std::pair<Mat, Mat>& split_data(const FusionCat& c, int charge, const Word& w1,
                                      const Word& w2) {
    SplitKey key{c.uid, charge, w1, w2};
    auto it = g_split_cache.find(key);
    if (it != g_split_cache.end()) return *it->second;

    Word w = concat(w1, w2);
    const BasisData& full = basis_data(c, charge, w);
    auto entries = adapted_basis(c, charge, w1, w2);
    Mat U = Mat::Zero(full.trees.size(), entries.size());
    for (int col = 0; col < (int)entries.size(); ++col) {
        const auto& e = entries[col];
        const auto& b1 = basis_data(c, e.a, w1).trees;
        const auto& b2 = basis_data(c, e.z, w2).trees;
        std::map<LCTree, cplx> acc;
        attach(c, charge, e.mu, e.a, b1[e.i], w1, e.z, b2[e.j], w2, cplx(1), acc);
        for (auto& [t, cv] : acc) U(full.index.at(t), col) += cv;
    }
    Mat Uinv;
    if (U.rows() > 0) {
        if (U.rows() != U.cols()) throw std::logic_error("split transform is not square");
        Eigen::PartialPivLU<Mat> lu(U);
        Uinv = lu.inverse();
        double resid = max_abs(Mat(U * Uinv - Mat::Identity(U.rows(), U.cols())));
        if (resid > 1e-7) throw std::runtime_error("split transform is numerically singular");
    } else {
        Uinv = Mat(0, 0);
    }
    auto& slot = g_split_cache[key];
    slot = std::make_shared<std::pair<Mat, Mat>>(std::move(U), std::move(Uinv));
    return *slot;
}

}  // namespace

const std::vector<LCTree>& lc_basis(const FusionCat& c, int charge, const Word& w) {
    return basis_data(c, charge, w).trees;
}

int lc_index(const FusionCat& c, int charge, const Word& w, const LCTree& t) {
    return basis_data(c, charge, w).index.at(t);
}

std::vector<AdaptedEntry> adapted_basis(const FusionCat& c, int charge, const Word& w1,
                                        const Word& w2) {
    std::vector<AdaptedEntry> out;
    for (int a = 0; a < c.rank(); ++a) {
        int d1 = (int)basis_data(c, a, w1).trees.size();
        if (!d1) continue;
        for (int z = 0; z < c.rank(); ++z) {
            int d2 = (int)basis_data(c, z, w2).trees.size();
            if (!d2 || !c.N(a, z, charge)) continue;
            for (int mu = 0; mu < c.N(a, z, charge); ++mu)
                for (int i = 0; i < d1; ++i)
                    for (int j = 0; j < d2; ++j) out.push_back({a, z, mu, i, j});
        }
    }
    return out;
}

Mat split_u(const FusionCat& c, int charge, const Word& w1, const Word& w2) {
    return split_data(c, charge, w1, w2).first;
}

Mat split_u_inv(const FusionCat& c, int charge, const Word& w1, const Word& w2) {
    return split_data(c, charge, w1, w2).second;
}

/* ---------------- WordOp algebra ---------------- */

WordOp id_op(const FusionCat& c, const Word& w) {
    WordOp op;
    op.win = op.wout = w;
    for (int ch = 0; ch < c.rank(); ++ch) {
        int d = hom_dim(c, ch, w);
        if (d) op.sec[ch] = Mat::Identity(d, d);
    }
    return op;
}

WordOp compose(const FusionCat& c, const WordOp& after, const WordOp& before) {
    if (after.win != before.wout) throw std::logic_error("compose: word mismatch");
    WordOp op;
    op.win = before.win;
    op.wout = after.wout;
    for (auto& [ch, m] : after.sec) {
        auto it = before.sec.find(ch);
        if (it == before.sec.end()) continue;
        Mat prod = m * it->second;
        if (prod.size()) op.sec[ch] = std::move(prod);
    }
    (void)c;
    return op;
}

WordOp tensor(const FusionCat& c, const WordOp& a, const WordOp& b) {
    WordOp op;
    op.win = concat(a.win, b.win);
    op.wout = concat(a.wout, b.wout);
    for (int ch = 0; ch < c.rank(); ++ch) {
        int din = hom_dim(c, ch, op.win), dout = hom_dim(c, ch, op.wout);
        if (!din || !dout) continue;
        auto ein = adapted_basis(c, ch, a.win, b.win);
        auto eout = adapted_basis(c, ch, a.wout, b.wout);
        Mat M = Mat::Zero(dout, din);
        /* scan groups (a-charge, z-charge, mu) in both adapted enumerations */
        size_t ci = 0;
        while (ci < ein.size()) {
            int ga = ein[ci].a, gz = ein[ci].z, gmu = ein[ci].mu;
            size_t ci_end = ci;
            while (ci_end < ein.size() && ein[ci_end].a == ga && ein[ci_end].z == gz &&
                   ein[ci_end].mu == gmu)
                ++ci_end;
            const Mat* am = a.sector_if(ga);
            const Mat* bm = b.sector_if(gz);
            if (am && bm) {
                /* locate the same group among output entries */
                size_t ro = 0;
                while (ro < eout.size() &&
                       !(eout[ro].a == ga && eout[ro].z == gz && eout[ro].mu == gmu))
                    ++ro;
                if (ro < eout.size()) {
                    Mat K = kron(*am, *bm);
                    M.block(ro, ci, K.rows(), K.cols()) = K;
                }
            }
            ci = ci_end;
        }
        op.sec[ch] = split_u(c, ch, a.wout, b.wout) * M * split_u_inv(c, ch, a.win, b.win);
    }
    return op;
}

WordOp scale(WordOp op, cplx s) {
    for (auto& [ch, m] : op.sec) m *= s;
    return op;
}

WordOp add(const FusionCat& c, const WordOp& a, const WordOp& b) {
    if (a.win != b.win || a.wout != b.wout) throw std::logic_error("add: word mismatch");
    WordOp op = a;
    for (auto& [ch, m] : b.sec) {
        auto it = op.sec.find(ch);
        if (it == op.sec.end())
            op.sec[ch] = m;
        else
            it->second += m;
    }
    (void)c;
    return op;
}

double op_norm(const WordOp& a) {
    double out = 0;
    for (auto& [ch, m] : a.sec) out = std::max(out, max_abs(m));
    return out;
}

double op_distance(const FusionCat& c, const WordOp& a, const WordOp& b) {
    if (a.win != b.win || a.wout != b.wout) throw std::logic_error("op_distance: word mismatch");
    double out = 0;
    for (int ch = 0; ch < c.rank(); ++ch) {
        const Mat* am = a.sector_if(ch);
        const Mat* bm = b.sector_if(ch);
        if (!am && !bm) continue;
        if (am && bm)
            out = std::max(out, max_abs(Mat(*am - *bm)));
        else
            out = std::max(out, max_abs(am ? *am : *bm));
    }
    return out;
}

/* ---------------- elementary morphisms ---------------- */

WordOp coev_op(const FusionCat& c, int x) {
    WordOp op;
    op.win = {};
    op.wout = {x, c.dual[x]};
    op.sec[0] = Mat::Constant(1, 1, cplx(1));
    return op;
}

WordOp ev_op(const FusionCat& c, int x) {
    WordOp op;
    op.win = {c.dual[x], x};
    op.wout = {};
    op.sec[0] = Mat::Constant(1, 1, cplx(1) / c.phi[x]);
    return op;
}

WordOp evtilde_op(const FusionCat& c, int x) {
    WordOp op;
    op.win = {x, c.dual[x]};
    op.wout = {};
    op.sec[0] = Mat::Constant(1, 1, c.qdim[x]);
    return op;
}

WordOp coevtilde_op(const FusionCat& c, int x) {
    WordOp op;
    op.win = {};
    op.wout = {c.dual[x], x};
    op.sec[0] = Mat::Constant(1, 1, cplx(1) / c.pivotal[x]);
    return op;
}

WordOp vertex_op(const FusionCat& c, int a, int b, int ch, int mu) {
    if (mu < 0 || mu >= c.N(a, b, ch)) throw std::logic_error("vertex_op: bad multiplicity");
    WordOp op;
    op.win = {ch};
    op.wout = {a, b};
    Mat m = Mat::Zero(hom_dim(c, ch, op.wout), 1);
    LCTree t;
    t.spine = {a, ch};
    t.mult = {mu};
    m(lc_index(c, ch, op.wout, t), 0) = 1;
    op.sec[ch] = std::move(m);
    return op;
}

WordOp covertex_op(const FusionCat& c, int a, int b, int ch, int mu) {
    if (mu < 0 || mu >= c.N(a, b, ch)) throw std::logic_error("covertex_op: bad multiplicity");
    WordOp op;
    op.win = {a, b};
    op.wout = {ch};
    Mat m = Mat::Zero(1, hom_dim(c, ch, op.win));
    LCTree t;
    t.spine = {a, ch};
    t.mult = {mu};
    m(0, lc_index(c, ch, op.win, t)) = 1;
    op.sec[ch] = std::move(m);
    return op;
}

WordOp braid_op(const FusionCat& c, int a, int b) {
    WordOp op;
    op.win = {a, b};
    op.wout = {b, a};
    for (int ch = 0; ch < c.rank(); ++ch) {
        if (!c.N(a, b, ch) || !c.N(b, a, ch)) continue;
        op.sec[ch] = c.rblock(a, b, ch).transpose();
    }
    return op;
}

WordOp op_from_vec(const FusionCat& c, const Word& w, const Vec& v) {
    if (v.size() != hom_dim(c, 0, w)) throw std::logic_error("op_from_vec: wrong length");
    WordOp op;
    op.win = {};
    op.wout = w;
    op.sec[0] = v;
    return op;
}

Vec vec_from_op(const FusionCat& c, const WordOp& op) {
    if (!op.win.empty()) throw std::logic_error("vec_from_op: source is not the unit");
    const Mat* m = op.sector_if(0);
    if (!m) return Vec::Zero(hom_dim(c, 0, op.wout));
    return Vec(m->col(0));
}

/* ---------------- rotation ---------------- */

Mat rotate_closed(const FusionCat& c, const Word& w) {
    if (w.empty()) throw std::logic_error("rotate_closed: empty word");
    int x = w[0];
    Word rest(w.begin() + 1, w.end());
    Word wrot = concat(rest, {x});
    int din = hom_dim(c, 0, w), dout = hom_dim(c, 0, wrot);
    Mat R(dout, din);
    WordOp idxs = id_op(c, Word{c.dual[x]});
    WordOp idx = id_op(c, Word{x});
    WordOp evx = ev_op(c, x);
    WordOp cup = coevtilde_op(c, x);
    WordOp idrest = id_op(c, wrot);
    WordOp evfull = tensor(c, evx, idrest);
    for (int i = 0; i < din; ++i) {
        Vec e = Vec::Zero(din);
        e(i) = 1;
        WordOp f = op_from_vec(c, w, e);
        WordOp mid = tensor(c, tensor(c, idxs, f), idx);
        WordOp g = compose(c, mid, cup);
        WordOp res = compose(c, evfull, g);
        R.col(i) = vec_from_op(c, res);
    }
    return R;
}

Mat rotate_closed_inv(const FusionCat& c, const Word& w) {
    if (w.empty()) throw std::logic_error("rotate_closed_inv: empty word");
    int x = w.back();
    Word rest(w.begin(), w.end() - 1);
    Word wrot = concat({x}, rest);
    int din = hom_dim(c, 0, w), dout = hom_dim(c, 0, wrot);
    Mat R(dout, din);
    WordOp idx = id_op(c, Word{x});
    WordOp idxs = id_op(c, Word{c.dual[x]});
    WordOp cup = coev_op(c, x);
    WordOp evfull = tensor(c, id_op(c, wrot), evtilde_op(c, x));
    for (int i = 0; i < din; ++i) {
        Vec e = Vec::Zero(din);
        e(i) = 1;
        WordOp f = op_from_vec(c, w, e);
        WordOp mid = tensor(c, tensor(c, idx, f), idxs);
        WordOp g = compose(c, mid, cup);
        WordOp res = compose(c, evfull, g);
        R.col(i) = vec_from_op(c, res);
    }
    return R;
}

WordOp rotate_endo(const FusionCat& c, const WordOp& op) {
    if (op.win != op.wout || op.win.empty()) throw std::logic_error("rotate_endo: not an endo");
    int x = op.win[0];
    Word rest(op.win.begin() + 1, op.win.end());
    Word wrot = concat(rest, {x});
    WordOp pre = tensor(c, coevtilde_op(c, x), id_op(c, wrot));
    WordOp mid = tensor(c, tensor(c, id_op(c, Word{c.dual[x]}), op), id_op(c, Word{x}));
    WordOp post = tensor(c, ev_op(c, x), id_op(c, wrot));
    return compose(c, post, compose(c, mid, pre));
}

WordOp rotate_endo_inv(const FusionCat& c, const WordOp& op) {
    if (op.win != op.wout || op.win.empty())
        throw std::logic_error("rotate_endo_inv: not an endo");
    int x = op.win.back();
    Word rest(op.win.begin(), op.win.end() - 1);
    Word wrot = concat({x}, rest);
    WordOp pre = tensor(c, id_op(c, wrot), coev_op(c, x));
    WordOp mid = tensor(c, tensor(c, id_op(c, Word{x}), op), id_op(c, Word{c.dual[x]}));
    WordOp post = tensor(c, id_op(c, wrot), evtilde_op(c, x));
    return compose(c, post, compose(c, mid, pre));
}

/* ---------------- traces ---------------- */

cplx qtrace(const FusionCat& c, const WordOp& op) {
    if (op.win != op.wout) throw std::logic_error("qtrace: not an endomorphism");
    cplx out = 0;
    for (auto& [ch, m] : op.sec) out += c.qdim[ch] * m.trace();
    return out;
}

WordOp ptr_last(const FusionCat& c, const WordOp& op) {
    if (op.win != op.wout || op.win.empty()) throw std::logic_error("ptr_last: not an endo");
    const Word& w = op.win;
    int x = w.back();
    int xd = c.dual[x];
    Word wp(w.begin(), w.end() - 1);
    WordOp out;
    out.win = out.wout = wp;
    for (auto& [m, mat] : op.sec) {
        Mat S = split_u_inv(c, m, wp, {x}) * mat * split_u(c, m, wp, {x});
        auto entries = adapted_basis(c, m, wp, {x});
        /* offset of group (a, mu) inside the adapted enumeration */
        std::map<std::pair<int, int>, int> off;
        for (int idx = 0; idx < (int)entries.size(); ++idx) {
            auto& e = entries[idx];
            if (e.j != 0) throw std::logic_error("single-letter factor dimension > 1");
            if (!off.count({e.a, e.mu})) off[{e.a, e.mu}] = idx;
        }
        for (int a = 0; a < c.rank(); ++a) {
            int da = hom_dim(c, a, wp);
            if (!da || !c.N(a, x, m)) continue;
            const FBlock& blk = c.fblock(a, x, xd, a);
            int col0 = blk.col_of.at({0, 0, 0});
            Mat& acc = out.sec[a];
            if (!acc.size()) acc = Mat::Zero(da, da);
            for (int al = 0; al < c.N(a, x, m); ++al)
                for (int be = 0; be < c.N(m, xd, a); ++be) {
                    cplx finv = blk.Finv(col0, blk.row_of.at({m, al, be}));
                    if (finv == cplx(0)) continue;
                    for (int mu = 0; mu < c.N(a, x, m); ++mu) {
                        cplx fv = blk.F(blk.row_of.at({m, mu, be}), col0);
                        if (fv == cplx(0)) continue;
                        cplx wgt = c.qdim[x] * finv * fv;
                        acc += wgt * S.block(off.at({a, mu}), off.at({a, al}), da, da);
                    }
                }
        }
    }
    return out;
}

WordOp ptr_first(const FusionCat& c, const WordOp& op) {
    if (op.win != op.wout || op.win.empty()) throw std::logic_error("ptr_first: not an endo");
    const Word& w = op.win;
    int x = w.front();
    int xd = c.dual[x];
    Word wr(w.begin() + 1, w.end());
    WordOp out;
    out.win = out.wout = wr;
    for (auto& [n, mat] : op.sec) {
        Mat S = split_u_inv(c, n, {x}, wr) * mat * split_u(c, n, {x}, wr);
        auto entries = adapted_basis(c, n, {x}, wr);
        std::map<std::pair<int, int>, int> off;
        for (int idx = 0; idx < (int)entries.size(); ++idx) {
            auto& e = entries[idx];
            if (!off.count({e.z, e.mu})) off[{e.z, e.mu}] = idx;
        }
        for (int z = 0; z < c.rank(); ++z) {
            int dz = hom_dim(c, z, wr);
            if (!dz || !c.N(x, z, n)) continue;
            const FBlock& blk = c.fblock(xd, x, z, z);
            int row0 = blk.row_of.at({0, 0, 0});
            if (!c.N(xd, n, z)) continue;
            Mat& acc = out.sec[z];
            if (!acc.size()) acc = Mat::Zero(dz, dz);
            cplx wgt0 = cplx(1) / (c.pivotal[x] * c.phi[x]);
            for (int rho = 0; rho < c.N(x, z, n); ++rho)
                for (int sg = 0; sg < c.N(xd, n, z); ++sg) {
                    cplx fv = blk.F(row0, blk.col_of.at({n, rho, sg}));
                    if (fv == cplx(0)) continue;
                    for (int mu = 0; mu < c.N(x, z, n); ++mu) {
                        cplx finv = blk.Finv(blk.col_of.at({n, mu, sg}), row0);
                        if (finv == cplx(0)) continue;
                        acc += wgt0 * fv * finv * S.block(off.at({z, mu}), off.at({z, rho}), dz, dz);
                    }
                }
        }
    }
    return out;
}

WordOp partial_trace_range(const FusionCat& c, const WordOp& op, int start, int len) {
    if (op.win != op.wout) throw std::logic_error("partial_trace_range: not an endo");
    const int n = (int)op.win.size();
    if (len < 0 || len > n || start < 0 || start >= std::max(n, 1))
        throw std::logic_error("partial_trace_range: bad range");
    if (len == 0) return op;
    int end = (start + len) % n;
    WordOp cur = op;
    for (int k = 0; k < end; ++k) cur = rotate_endo(c, cur);
    for (int k = 0; k < len; ++k) cur = ptr_last(c, cur);
    int back = (start + len <= n) ? (n - start - len) : 0;
    for (int k = 0; k < back && (int)cur.win.size() > 1; ++k) cur = rotate_endo(c, cur);
    if ((int)cur.win.size() <= 1) return cur;
    return cur;
}

/* ---------------- bending ---------------- */

WordOp op_from_closed(const FusionCat& c, int x, const Word& w, const Vec& v) {
    if (w.empty() || w[0] != c.dual[x]) throw std::logic_error("op_from_closed: word mismatch");
    Word rest(w.begin() + 1, w.end());
    Vec adapted = split_u_inv(c, 0, {c.dual[x]}, rest) * v;
    WordOp op;
    op.win = {x};
    op.wout = rest;
    op.sec[x] = c.pivotal[x] * adapted;
    return op;
}

Vec closed_from_op(const FusionCat& c, const WordOp& op) {
    if (op.win.size() != 1) throw std::logic_error("closed_from_op: source must be one letter");
    int x = op.win[0];
    Word w = concat({c.dual[x]}, op.wout);
    const Mat* m = op.sector_if(x);
    int dim = hom_dim(c, 0, w);
    if (!m) return Vec::Zero(dim);
    Vec adapted = *m / c.pivotal[x];
    return split_u(c, 0, {c.dual[x]}, op.wout) * adapted;
}

Vec random_closed(const FusionCat& c, const Word& w, Rng& rng) {
    return rng.cgauss_vec(hom_dim(c, 0, w));
}

}  // namespace tft
