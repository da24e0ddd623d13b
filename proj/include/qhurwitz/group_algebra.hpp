#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qhurwitz/family.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/scalar.hpp"
#include "qhurwitz/symfunc.hpp"

namespace qhurwitz {

inline constexpr int kDefaultGroupAlgebraBound = 8;
inline constexpr int kPathMaxN = 6;
inline constexpr int kPathMaxD = 5;

/// Permutation of {1..n} in one-line notation (stored 0-based).
class Permutation {
public:
    explicit Permutation(int n = 0);
    /// One-line notation with values 1..n.
    static Permutation from_one_line(const std::vector<int>& images);
    /// Transposition (a b), 1-based, a != b.
    static Permutation transposition(int n, int a, int b);
    /// A permutation of the given cycle type.
    static Permutation of_cycle_type(const Partition& mu);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }
    std::vector<int> one_line() const;
    Partition cycle_type() const;

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
    std::vector<int> img_;
};

/// All permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// Explicit element of C[S_n]; used as a brute-force reference.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}
    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement class_sum(const Partition& mu);
    /// J_b = Σ_{a<b} (a b), 1-based b.
    static GroupAlgebraElement jucys_murphy(int n, int b);

    int n() const { return n_; }
    const std::map<Permutation, Scalar>& terms() const { return terms_; }
    void add(const Permutation& g, const Scalar& c);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    GroupAlgebraElement scaled(const Scalar& c) const;
    Scalar coeff(const Permutation& g) const;

private:
    int n_;
    std::map<Permutation, Scalar> terms_;
};

enum class CentralBasis { C, F };

/// Element of the centre Z(C[S_n]) in the class-sum basis C_μ or the idempotent basis F_λ.
class CentralElement {
public:
    using Coeffs = std::map<Partition, Scalar, RevLex>;

    CentralElement(int n, CentralBasis basis);
    static CentralElement identity(int n);
    static CentralElement class_sum(const Partition& mu);
    static CentralElement idempotent(const Partition& lambda);
    /// Centre element from an explicit group-algebra element (read off at class representatives).
    static CentralElement from_group_algebra(const GroupAlgebraElement& x);

    int n() const { return n_; }
    CentralBasis basis() const { return basis_; }
    const Coeffs& coeffs() const { return coeffs_; }
    Scalar coeff(const Partition& p) const;
    void add(const Partition& p, const Scalar& c);

    CentralElement convert(CentralBasis target) const;
    CentralElement& operator+=(const CentralElement& o);
    friend CentralElement operator+(CentralElement a, const CentralElement& b) { return a += b; }
    CentralElement scaled(const Scalar& c) const;
    /// Equal as elements of the centre (compared in the C basis).
    friend bool operator==(const CentralElement& a, const CentralElement& b);
    GroupAlgebraElement to_group_algebra() const;
    std::string to_string() const;

private:
    int n_;
    CentralBasis basis_;
    Coeffs coeffs_;
};

CentralElement class_basis_change(const CentralElement& x, CentralBasis target);
/// Product computed diagonally in the F basis, returned in x's basis.
CentralElement central_multiply(const CentralElement& x, const CentralElement& y);
/// f(J_1, ..., J_n) in the F basis: the λ-coefficient is f at the contents of λ.
CentralElement jm_symmetric_apply(const SymFunc& f, int n);

/// m̃^λ_{μν}: number of d-step transposition sequences from cyc(ν) to cyc(μ) whose
/// larger endpoints have multiplicities λ.
struct PathCountMatrix {
    int n = 0;
    int d = 0;
    /// (signature, from, to) -> count
    std::map<std::tuple<Partition, Partition, Partition>, long> counts;

    long count(const Partition& sig, const Partition& from, const Partition& to) const;
    /// m^λ_{μν} = (Π λ_i! / d!) m̃^λ_{μν}, with μ = to and ν = from.
    Rational normalized(const Partition& sig, const Partition& to, const Partition& from) const;
    std::string to_json() const;
};

PathCountMatrix enumerate_paths(int n, int d);

/// F^d(μ,ν) = (1/n!) Σ_{λ⊢d} w_λ m^λ_{μν}, keyed by (μ, ν).
std::map<std::pair<Partition, Partition>, Scalar> fd_bruteforce(int n, int d, const WeightFamily& family);

} // namespace qhurwitz
