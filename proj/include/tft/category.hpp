#pragma once
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tft/linalg.hpp"

namespace tft {

/* One associator block F^{ijk}_l together with its basis bookkeeping.
   Rows enumerate left-parenthesised channels (m,mu,nu) with
     mu < N(i,j;m), nu < N(m,k;l),
   columns enumerate right-parenthesised channels (n,rho,sig) with
     rho < N(j,k;n), sig < N(i,n;l),
   both in ascending lexicographic order.  The matrix is the change of basis
     T_left(m,mu,nu) = sum_{n,rho,sig} F[(m,mu,nu),(n,rho,sig)] T_right(n,rho,sig),
   so coordinate vectors transform by F^T from left to right. */
struct FBlock {
    Mat F, Finv;
    std::vector<std::array<int, 3>> rows, cols;
    std::map<std::array<int, 3>, int> row_of, col_of;
    bool invertible = false;
};

/* Skeletal pivotal (optionally braided / ribbon) fusion category over C.
   Simple 0 is the strict tensor unit.  All engine code assumes unit-strict
   gauge: any F-block with a unit index is the identity matrix; this is
   checked by validate(), not silently fixed. */
struct FusionCat {
    std::vector<std::string> simple_names;
    std::vector<int> dual;                            // involution, dual[0] == 0
    std::vector<std::vector<std::vector<int>>> fusion; // N[i][j][k] = dim Hom(k, i x j)
    std::map<std::array<int, 4>, FBlock> fb;          // key (i,j,k,l), admissible only
    std::vector<cplx> pivotal;                        // t_i, pivotal gauge scalars
    bool spherical = false;

    bool braided = false;
    std::map<std::array<int, 3>, Mat> rb;             // R^{ab}_c, N(a,b;c) x N(b,a;c)
    bool has_ribbon = false;
    std::vector<cplx> twist;                          // theta_i when has_ribbon

    /* derived */
    std::vector<cplx> phi;       // F^{i,i*,i}_i at the unit channel (zigzag scalar)
    std::vector<cplx> qdim;      // right quantum dimension t_i / phi_{dual i}
    std::vector<cplx> qdim_left; // 1 / (t_i phi_i)
    bool strict_ok = false;      // unit rows/columns of N and duality row N(i,j;0)=delta
    uint64_t uid = 0;            // distinguishes table sets for calculus caches

    int rank() const { return (int)simple_names.size(); }
    int N(int i, int j, int k) const { return fusion[i][j][k]; }
    bool adm(int i, int j, int k) const { return fusion[i][j][k] > 0; }

    bool f_admissible(int i, int j, int k, int l) const;
    const FBlock& fblock(int i, int j, int k, int l) const;
    /* R^{ab}_c; coordinate action of post-composing c_{a,b}: coords_ba = R^T coords_ab */
    const Mat& rblock(int a, int b, int c) const;
    cplx theta(int i) const;

    /* Build from raw tables: checks shapes and involution (throws on failure),
       densifies F-blocks (absent admissible blocks become zero matrices),
       computes inverses and derived scalars. */
    static FusionCat build(std::vector<std::string> names, std::vector<int> dual,
                           std::vector<std::vector<std::vector<int>>> fusion,
                           const std::map<std::array<int, 4>, Mat>& fmats,
                           std::vector<cplx> pivotal, bool spherical,
                           const std::map<std::array<int, 3>, Mat>* rmats = nullptr,
                           const std::vector<cplx>* twist = nullptr);

    /* Throws unless the integer data supports the word calculus. */
    void require_strict() const;
};

/* Built-in examples: "trivial", "vec_z2", "fibonacci", "ising". */
FusionCat builtin_category(const std::string& name);

/* JSON (de)serialisation.  parse_category performs structural checks only;
   coherence is validate()'s job. */
FusionCat parse_category(const std::string& json_text);
std::string category_to_json(const FusionCat& cat);

/* Resolve "builtin:NAME" or a filesystem path. */
FusionCat load_category(const std::string& ref);

struct ValidationIssue {
    std::string family;
    double residual;
    std::string detail;
};

struct ValidationReport {
    std::map<std::string, double> family_residual;
    std::vector<ValidationIssue> worst;
    double max_residual() const {
        double m = 0;
        for (auto& [k, v] : family_residual) m = std::max(m, v);
        return m;
    }
    bool passed(double tol) const { return max_residual() <= tol; }
};

/* Individual residual families (exact/integer families report 0 or 1-scaled
   violations).  These need only the category tables. */
void check_fusion_ring(const FusionCat& c, ValidationReport& rep);
void check_unit_gauge(const FusionCat& c, ValidationReport& rep);
void check_duality(const FusionCat& c, ValidationReport& rep);
void check_pentagon(const FusionCat& c, ValidationReport& rep);
void check_spherical(const FusionCat& c, ValidationReport& rep);
void check_ribbon_data(const FusionCat& c, ValidationReport& rep);

/* Full coherence check: the families above plus rotation coherence of the
   pivotal structure and the operational hexagon (braided input only). */
ValidationReport validate(const FusionCat& c);

}  // namespace tft
