#pragma once
#include "tft/category.hpp"

namespace tft {

/* A word is a finite sequence of simple indices; the empty word is the unit. */
using Word = std::vector<int>;

Word concat(const Word& a, const Word& b);
/* (w_1 ... w_n)* = (w_n*, ..., w_1*) */
Word dual_reversed(const FusionCat& c, const Word& w);

/* Left-comb fusion tree for Hom(c, w_1 x ... x w_n):
   spine[0] = w_1, spine[t] = charge after fusing w_{t+1}, spine[n-1] = c,
   mult[t-1] < N(spine[t-1], w_t; spine[t]).  Empty word: empty tree (c = 0). */
struct LCTree {
    std::vector<int> spine;
    std::vector<int> mult;
    bool operator<(const LCTree& o) const {
        if (spine != o.spine) return spine < o.spine;
        return mult < o.mult;
    }
    bool operator==(const LCTree& o) const { return spine == o.spine && mult == o.mult; }
};

int hom_dim(const FusionCat& c, int charge, const Word& w);
const std::vector<LCTree>& lc_basis(const FusionCat& c, int charge, const Word& w);
int lc_index(const FusionCat& c, int charge, const Word& w, const LCTree& t);

/* Adapted basis entry for the factorisation
   Hom(c, w1.w2) = sum_{a,z,mu} V(a,z;c)_mu (x) Hom(a,w1) (x) Hom(z,w2):
   i indexes lc_basis(a,w1), j indexes lc_basis(z,w2); entries are ordered
   (a, z, mu) lexicographically, then i-major / j-minor. */
struct AdaptedEntry {
    int a, z, mu, i, j;
};
std::vector<AdaptedEntry> adapted_basis(const FusionCat& c, int charge, const Word& w1,
                                        const Word& w2);
/* U maps adapted coordinates to left-comb coordinates of Hom(c, w1.w2). */
Mat split_u(const FusionCat& c, int charge, const Word& w1, const Word& w2);
Mat split_u_inv(const FusionCat& c, int charge, const Word& w1, const Word& w2);

/* Morphism between tensor products of simples, one matrix per total charge.
   sec[c] has shape hom_dim(c,wout) x hom_dim(c,win); sectors where either
   dimension vanishes are absent, and an absent sector means zero. */
struct WordOp {
    Word win, wout;
    std::map<int, Mat> sec;
    const Mat* sector_if(int c) const {
        auto it = sec.find(c);
        return it == sec.end() ? nullptr : &it->second;
    }
};

WordOp id_op(const FusionCat& c, const Word& w);
WordOp compose(const FusionCat& c, const WordOp& after, const WordOp& before);
WordOp tensor(const FusionCat& c, const WordOp& a, const WordOp& b);
WordOp scale(WordOp op, cplx s);
WordOp add(const FusionCat& c, const WordOp& a, const WordOp& b);
double op_norm(const WordOp& a);            /* max abs entry over sectors */
double op_distance(const FusionCat& c, const WordOp& a, const WordOp& b);

/* elementary morphisms */
WordOp coev_op(const FusionCat& c, int x);      /* {} -> (x, x*) */
WordOp ev_op(const FusionCat& c, int x);        /* (x*, x) -> {} */
WordOp evtilde_op(const FusionCat& c, int x);   /* (x, x*) -> {} */
WordOp coevtilde_op(const FusionCat& c, int x); /* {} -> (x*, x) */
WordOp vertex_op(const FusionCat& c, int a, int b, int ch, int mu);   /* (ch) -> (a,b) */
WordOp covertex_op(const FusionCat& c, int a, int b, int ch, int mu); /* (a,b) -> (ch) */
/* braiding as an operator (a,b) -> (b,a); requires braided input */
WordOp braid_op(const FusionCat& c, int a, int b);

/* closed vectors: elements of Hom(0, w) in left-comb coordinates */
WordOp op_from_vec(const FusionCat& c, const Word& w, const Vec& v);
Vec vec_from_op(const FusionCat& c, const WordOp& op);

/* cyclic rotation on closed vectors: Hom(0, x.w') -> Hom(0, w'.x),
   f |-> (ev_x (x) id) o (id_{x*} (x) f (x) id_x) o coevtilde_x */
Mat rotate_closed(const FusionCat& c, const Word& w);
Mat rotate_closed_inv(const FusionCat& c, const Word& w); /* on Hom(0, w'.x) -> Hom(0, x.w') */

/* the same rotation on endomorphisms of a word */
WordOp rotate_endo(const FusionCat& c, const WordOp& op);
WordOp rotate_endo_inv(const FusionCat& c, const WordOp& op);

/* quantum trace and partial traces (right trace; spherical input makes the
   choice immaterial) */
cplx qtrace(const FusionCat& c, const WordOp& op);
WordOp ptr_last(const FusionCat& c, const WordOp& op);
WordOp ptr_first(const FusionCat& c, const WordOp& op);
/* trace out len letters starting at position start, cyclically contiguous */
WordOp partial_trace_range(const FusionCat& c, const WordOp& op, int start, int len);

/* unbend: closed vector on (x*).W  <->  operator (x) -> W (convention: the
   closed vector equals (id_{x*} (x) f) o coevtilde_x) */
WordOp op_from_closed(const FusionCat& c, int x, const Word& w, const Vec& v);
Vec closed_from_op(const FusionCat& c, const WordOp& op);

Vec random_closed(const FusionCat& c, const Word& w, Rng& rng);

}  // namespace tft
