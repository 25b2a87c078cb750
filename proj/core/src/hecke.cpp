#include "modeq/hecke.hpp"

#include <sstream>
#include <stdexcept>

#include "modeq/errors.hpp"

namespace modeq {

RatMatrix RatMatrix::identity(long n) {
    RatMatrix m(n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    RatMatrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    RatMatrix r(a.n_);
    for (long i = 0; i < a.n_; ++i)
        for (long k = 0; k < a.n_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Rational RatMatrix::trace() const {
    Rational t;
    for (long i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

UniPoly RatMatrix::charpoly(const std::string& var) const {
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k ... all divisions by
    // integers, so exact over Q.
    const long n = n_;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = Rational(1);
    RatMatrix m = RatMatrix::identity(n);
    for (long k = 1; k <= n; ++k) {
        m = *this * m;
        const Rational ck = -m.trace() / Rational(k);
        c[static_cast<std::size_t>(n - k)] = ck;
        for (long i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    return UniPoly(var, std::move(c));
}

long dimension(const CurveData& curve, long k) {
    if (k < 4 || k % 2 != 0)
        throw std::domain_error("dimension formula needs an even weight k >= 4, got k=" +
                                std::to_string(k));
    long d = 1 - k;
    for (const auto& p : curve.points) {
        // floor((k/2)(1 - 1/e)) = floor(k(e-1)/(2e))
        const long e = p.order;
        d += (k * (e - 1)) / (2 * e);
    }
    return d;
}

BasisExponents basis_exponents(const CurveData& curve, long k) {
    BasisExponents be;
    be.weight = k;
    be.dim = dimension(curve, k);
    for (const auto& p : curve.points) {
        if (!p.finite()) continue;
        const long e = p.order;
        be.point_exponents.push_back((k * (e - 1)) / (2 * e));
    }
    return be;
}

std::vector<Rational> power_embedding(const CurveData& curve, long k, long m) {
    if (m < 1) throw std::invalid_argument("power_embedding needs m >= 1");
    const BasisExponents seed = basis_exponents(curve, k);
    const BasisExponents target = basis_exponents(curve, k * m);
    UniPoly shift = UniPoly::constant("t", Rational(1));
    std::size_t idx = 0;
    for (const auto& p : curve.points) {
        if (!p.finite()) continue;
        const long delta = target.point_exponents[idx] - m * seed.point_exponents[idx];
        if (delta < 0) {
            std::ostringstream os;
            os << "floor identity fails at t=" << p.a->to_string() << ": floor(" << k * m << "(1-1/"
               << p.order << ")/2) = " << target.point_exponents[idx] << " < m*floor(" << k
               << "(1-1/" << p.order << ")/2) = " << m * seed.point_exponents[idx];
            throw std::domain_error(os.str());
        }
        shift = shift * UniPoly::linear_root("t", *p.a).pow(static_cast<unsigned long>(delta));
        ++idx;
    }
    if (shift.degree() + 1 > target.dim) {
        std::ostringstream os;
        os << "embedding overflow at weight " << k * m << ": shift polynomial degree "
           << shift.degree() << " needs dimension >= " << shift.degree() + 1 << ", have "
           << target.dim;
        throw std::domain_error(os.str());
    }
    std::vector<Rational> beta(static_cast<std::size_t>(target.dim));
    for (long i = 0; i <= shift.degree(); ++i) beta[static_cast<std::size_t>(i)] = shift.coeff(i);
    return beta;
}

RatMatrix hecke_transfer(const RatMatrix& A, const UniPoly& g) {
    const UniPoly chi = A.charpoly();
    if (poly_gcd(chi, chi.derivative()).degree() > 0)
        throw std::domain_error(
            "repeated eigenvalues: the eigenvalue transfer is ill-defined for this matrix");
    const long n = A.size();
    RatMatrix b(n);
    if (g.is_zero()) return b;
    for (long i = g.degree(); i >= 0; --i) {
        b = A * b;
        const Rational& c = g.coeff(i);
        for (long d = 0; d < n; ++d) b.at(d, d) += c;
    }
    return b;
}

HeckeTable hecke_transfer_table(const HeckeTable& A, const EigenTransferMap& maps) {
    if (A.prime != maps.base_prime)
        throw ValidationError("eigen-map base prime " + std::to_string(maps.base_prime) +
                              " does not match table prime " + std::to_string(A.prime));
    HeckeTable out;
    out.prime = maps.target_prime;
    for (const auto& [k, mat] : A.by_weight) {
        const auto it = maps.by_weight.find(k);
        if (it == maps.by_weight.end())
            throw ValidationError("eigen-map is missing weight " + std::to_string(k));
        out.by_weight.emplace(k, hecke_transfer(mat, it->second));
    }
    return out;
}

PowerSums power_sums(const CurveData& curve, long p, long k, const HeckeTable& transferred) {
    if (transferred.prime != p)
        throw ValidationError("power sums for prime " + std::to_string(p) +
                              " got a table for prime " + std::to_string(transferred.prime));
    PowerSums ps;
    ps.prime = p;
    ps.seed_weight = k;
    for (long m = 1; m <= p + 1; ++m) {
        const long km = k * m;
        const auto it = transferred.by_weight.find(km);
        if (it == transferred.by_weight.end())
            throw ValidationError("missing Hecke data at weight " + std::to_string(km));
        const RatMatrix& b = it->second;
        const std::vector<Rational> beta = power_embedding(curve, k, m);
        if (static_cast<long>(beta.size()) != b.size())
            throw ValidationError("dimension mismatch at weight " + std::to_string(km));
        // numerator: (beta^T B) v(t); denominator: p^{km/2-1} beta^T v(t)
        std::vector<Rational> num(beta.size()), den(beta.size());
        for (long j = 0; j < b.size(); ++j) {
            Rational acc;
            for (long i = 0; i < b.size(); ++i) acc += beta[static_cast<std::size_t>(i)] * b.at(i, j);
            num[static_cast<std::size_t>(j)] = acc;
            den[static_cast<std::size_t>(j)] = beta[static_cast<std::size_t>(j)];
        }
        const Rational scale(int_pow(Integer(p), static_cast<unsigned long>(km / 2 - 1)));
        UniPoly num_poly("t", std::move(num));
        UniPoly den_poly("t", std::move(den));
        ps.sums.push_back(RationalFunction(num_poly, den_poly * scale));
    }
    return ps;
}

void validate_table(const CurveData& curve, const HeckeTable& table) {
    for (const auto& [k, mat] : table.by_weight) {
        const long d = dimension(curve, k);
        if (mat.size() != d)
            throw ValidationError("Hecke matrix at weight " + std::to_string(k) + " has side " +
                                  std::to_string(mat.size()) + " but dim S_" + std::to_string(k) +
                                  " = " + std::to_string(d));
    }
}

void validate_eigenmap(const CurveData& curve, const EigenTransferMap& maps) {
    for (const auto& [k, g] : maps.by_weight) {
        const long d = dimension(curve, k);
        if (g.degree() >= d)
            throw ValidationError("eigen-map polynomial at weight " + std::to_string(k) +
                                  " has degree " + std::to_string(g.degree()) +
                                  ", expected < dim = " + std::to_string(d));
    }
}

long smallest_positive_weight(const CurveData& curve) {
    for (long k = 4;; k += 2)
        if (dimension(curve, k) >= 1) return k;
}

}  // namespace modeq
