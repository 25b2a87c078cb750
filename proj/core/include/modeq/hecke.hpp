#pragma once

#include <map>
#include <string>
#include <vector>

#include "modeq/ratfun.hpp"
#include "modeq/schwarzian.hpp"
#include "modeq/unipoly.hpp"

namespace modeq {

/// Small dense square matrix over Q.
class RatMatrix {
public:
    explicit RatMatrix(long n = 0) : n_(n), a_(static_cast<std::size_t>(n * n)) {}
    static RatMatrix identity(long n);

    long size() const { return n_; }
    Rational& at(long i, long j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const Rational& at(long i, long j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    RatMatrix operator*(const Rational& s) const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    Rational trace() const;
    // det(x I - A), monic; Faddeev-LeVerrier, exact over Q.
    UniPoly charpoly(const std::string& var = "x") const;

private:
    long n_;
    std::vector<Rational> a_;
};

/// Weight-indexed Hecke matrices for one prime, row convention
/// T (f_1..f_d)^T = A_k (f_1..f_d)^T.
struct HeckeTable {
    long prime = 0;
    std::map<long, RatMatrix> by_weight;
};

/// Weight-indexed polynomials g_k with mu = g_k(lambda) sending each
/// T_{p0}-eigenvalue to the matching T_p-eigenvalue.
struct EigenTransferMap {
    long base_prime = 0;
    long target_prime = 0;
    std::map<long, UniPoly> by_weight;
};

struct BasisExponents {
    long weight = 0;
    std::vector<long> point_exponents;  // per finite point, curve order
    long dim = 0;
};

struct PowerSums {
    long prime = 0;
    long seed_weight = 0;
    std::vector<RationalFunction> sums;  // p_1 .. p_{prime+1}, functions of t
};

// dim S_k = 1 - k + sum_j floor((k/2)(1 - 1/e_j)); throws on odd k or k < 4.
long dimension(const CurveData& curve, long k);

// Per-finite-point exponents floor(k (1 - 1/e_i)/2) and the dimension.
BasisExponents basis_exponents(const CurveData& curve, long k);

// Coefficient vector beta with F^m = sum_s beta_s f_{km,s+1} for the seed
// form F = f_{k,1}; beta is prod_{finite}(t - a_i)^{delta_i} read off by
// powers of t. Throws when a floor identity fails.
std::vector<Rational> power_embedding(const CurveData& curve, long k, long m);

// g(A) by Horner; requires the characteristic polynomial of A squarefree.
RatMatrix hecke_transfer(const RatMatrix& A, const UniPoly& g);

// Transfers every weight of the table through the eigen-map.
HeckeTable hecke_transfer_table(const HeckeTable& A, const EigenTransferMap& maps);

// p_m(t) = p^{1 - km/2} (beta^T B_{km} v(t)) / (beta^T v(t)), m = 1..p+1,
// with v(t) = (1, t, ..., t^{d-1})^T.
PowerSums power_sums(const CurveData& curve, long p, long k, const HeckeTable& transferred);

// Matrix sides must equal the dimension at every stored weight; throws
// ValidationError naming the offending weight.
void validate_table(const CurveData& curve, const HeckeTable& table);
void validate_eigenmap(const CurveData& curve, const EigenTransferMap& maps);

// Smallest even weight k >= 4 with dim >= 1.
long smallest_positive_weight(const CurveData& curve);

}  // namespace modeq
