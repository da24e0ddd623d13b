#include "qhurwitz/group_algebra.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/parallel.hpp"

namespace qhurwitz {

// --- Permutation ------------------------------------------------------------

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
    Permutation p(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        int v = images[i] - 1;
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
            throw error("not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v)] = true;
        p.img_[i] = v;
    }
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a == b || a < 1 || b < 1 || a > n || b > n) throw error("invalid transposition");
    Permutation p(n);
    std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Permutation Permutation::of_cycle_type(const Partition& mu) {
    Permutation p(weight(mu));
    int start = 0;
    for (int len : mu) {
        for (int i = 0; i < len; ++i) p.img_[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return p;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out;
    for (int v : img_) out.push_back(v + 1);
    return out;
}

namespace {

Partition cycle_type_of(const int* img, int n) {
    bool seen[32] = {};
    Partition ct;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img[j]) {
            seen[j] = true;
            ++len;
        }
        ct.push_back(len);
    }
    std::sort(ct.begin(), ct.end(), std::greater<>());
    return ct;
}

} // namespace

Partition Permutation::cycle_type() const {
    if (img_.size() > 32) throw error("permutation too large");
    return cycle_type_of(img_.data(), size());
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw error("permutation sizes differ");
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = a.img_[static_cast<std::size_t>(b.img_[i])];
    return r;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// --- GroupAlgebraElement ----------------------------------------------------

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
    GroupAlgebraElement e(n);
    e.add(Permutation(n), Scalar(1));
    return e;
}

GroupAlgebraElement GroupAlgebraElement::class_sum(const Partition& mu) {
    const int n = weight(mu);
    GroupAlgebraElement e(n);
    for (const auto& g : all_permutations(n))
        if (g.cycle_type() == mu) e.add(g, Scalar(1));
    return e;
}

GroupAlgebraElement GroupAlgebraElement::jucys_murphy(int n, int b) {
    GroupAlgebraElement e(n);
    for (int a = 1; a < b; ++a) e.add(Permutation::transposition(n, a, b), Scalar(1));
    return e;
}

void GroupAlgebraElement::add(const Permutation& g, const Scalar& c) {
    if (g.size() != n_) throw error("permutation size differs from group order");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n_ != b.n_) throw error("group algebra sizes differ");
    GroupAlgebraElement r(a.n_);
    for (const auto& [g, x] : a.terms_)
        for (const auto& [h, y] : b.terms_) r.add(g * h, x * y);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Scalar& c) const {
    GroupAlgebraElement r(n_);
    for (const auto& [g, x] : terms_) r.add(g, x * c);
    return r;
}

Scalar GroupAlgebraElement::coeff(const Permutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar(0) : it->second;
}

// --- CentralElement ---------------------------------------------------------

CentralElement::CentralElement(int n, CentralBasis basis) : n_(n), basis_(basis) {
    if (n < 0) throw error("negative n");
    if (n > kDefaultGroupAlgebraBound)
        throw bound_exceeded("n exceeds group algebra bound (" + std::to_string(n) + " > " +
                             std::to_string(kDefaultGroupAlgebraBound) + ")");
}

CentralElement CentralElement::identity(int n) { return class_sum(Partition(static_cast<std::size_t>(n), 1)); }

CentralElement CentralElement::class_sum(const Partition& mu) {
    CentralElement e(weight(mu), CentralBasis::C);
    e.add(mu, Scalar(1));
    return e;
}

CentralElement CentralElement::idempotent(const Partition& lambda) {
    CentralElement e(weight(lambda), CentralBasis::F);
    e.add(lambda, Scalar(1));
    return e;
}

CentralElement CentralElement::from_group_algebra(const GroupAlgebraElement& x) {
    CentralElement e(x.n(), CentralBasis::C);
    for (const auto& mu : enumerate_partitions(x.n()))
        e.add(mu, x.coeff(Permutation::of_cycle_type(mu)));
    return e;
}

Scalar CentralElement::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

void CentralElement::add(const Partition& p, const Scalar& c) {
    if (weight(p) != n_) throw weight_mismatch("partition " + qhurwitz::to_string(p) + " is not of " + std::to_string(n_));
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

CentralElement CentralElement::convert(CentralBasis target) const {
    if (target == basis_) return *this;
    const auto& ct = char_table(n_);
    CentralElement out(n_, target);
    if (basis_ == CentralBasis::C) {
        for (const auto& lambda : ct.irreps) {
            Scalar s(0);
            Rational h = hook_product(lambda);
            for (const auto& [mu, a] : coeffs_) {
                long chi = ct.value(lambda, mu);
                if (chi) s += a * Scalar(h * Rational(chi) / z_mu(mu));
            }
            out.add(lambda, s);
        }
    } else {
        for (const auto& mu : ct.classes) {
            Scalar s(0);
            for (const auto& [lambda, a] : coeffs_) {
                long chi = ct.value(lambda, mu);
                if (chi) s += a * Scalar(Rational(chi) / hook_product(lambda));
            }
            out.add(mu, s);
        }
    }
    return out;
}

CentralElement& CentralElement::operator+=(const CentralElement& o) {
    if (o.n_ != n_) throw weight_mismatch("central elements of different n");
    CentralElement other = o.convert(basis_);
    for (const auto& [p, c] : other.coeffs_) add(p, c);
    return *this;
}

CentralElement CentralElement::scaled(const Scalar& c) const {
    CentralElement r(n_, basis_);
    for (const auto& [p, x] : coeffs_) r.add(p, x * c);
    return r;
}

bool operator==(const CentralElement& a, const CentralElement& b) {
    if (a.n_ != b.n_) return false;
    return a.convert(CentralBasis::C).coeffs_ == b.convert(CentralBasis::C).coeffs_;
}

GroupAlgebraElement CentralElement::to_group_algebra() const {
    CentralElement c = convert(CentralBasis::C);
    GroupAlgebraElement x(n_);
    for (const auto& g : all_permutations(n_)) {
        auto it = c.coeffs_.find(g.cycle_type());
        if (it != c.coeffs_.end()) x.add(g, it->second);
    }
    return x;
}

std::string CentralElement::to_string() const {
    std::string s;
    const char* tag = basis_ == CentralBasis::C ? "C" : "F";
    for (const auto& [p, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*" + tag + qhurwitz::to_string(p);
    }
    return s.empty() ? "0" : s;
}

CentralElement class_basis_change(const CentralElement& x, CentralBasis target) { return x.convert(target); }

CentralElement central_multiply(const CentralElement& x, const CentralElement& y) {
    if (x.n() != y.n()) throw weight_mismatch("central elements of different n");
    CentralElement a = x.convert(CentralBasis::F), b = y.convert(CentralBasis::F);
    CentralElement r(x.n(), CentralBasis::F);
    for (const auto& [lambda, c] : a.coeffs()) {
        Scalar d = b.coeff(lambda);
        if (!d.is_zero()) r.add(lambda, c * d);
    }
    return r.convert(x.basis());
}

CentralElement jm_symmetric_apply(const SymFunc& f, int n) {
    CentralElement r(n, CentralBasis::F);
    for (const auto& lambda : enumerate_partitions(n)) {
        auto cs = contents(lambda);
        r.add(lambda, f.eval_powersums([&](int k) {
            Rational s(0);
            for (int c : cs) s += Rational(c).pow(k);
            return Scalar(s);
        }));
    }
    return r;
}

// --- Path enumeration ---------------------------------------------------------

long PathCountMatrix::count(const Partition& sig, const Partition& from, const Partition& to) const {
    auto it = counts.find({sig, from, to});
    return it == counts.end() ? 0 : it->second;
}

Rational PathCountMatrix::normalized(const Partition& sig, const Partition& to, const Partition& from) const {
    Rational f(1);
    for (int k : sig) f *= factorial(k);
    return f / factorial(d) * Rational(count(sig, from, to));
}

std::string PathCountMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["d"] = d;
    auto arr = nlohmann::ordered_json::array();
    // Canonical order: signature, start class, end class, each reverse-lexicographic.
    std::vector<std::tuple<Partition, Partition, Partition>> keys;
    for (const auto& [k, v] : counts) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        RevLex lt;
        if (std::get<0>(a) != std::get<0>(b)) return lt(std::get<0>(a), std::get<0>(b));
        if (std::get<1>(a) != std::get<1>(b)) return lt(std::get<1>(a), std::get<1>(b));
        return lt(std::get<2>(a), std::get<2>(b));
    });
    for (const auto& k : keys) {
        nlohmann::ordered_json e;
        e["sig"] = std::get<0>(k);
        e["from"] = std::get<1>(k);
        e["to"] = std::get<2>(k);
        e["count"] = counts.at(k);
        arr.push_back(e);
    }
    j["counts"] = arr;
    return j.dump();
}

namespace {

struct PathWalker {
    int n, d;
    std::vector<std::pair<int, int>> transpositions;  // 0-based (a, b), a < b
    std::unordered_map<std::uint64_t, long> acc;
    int img[8];
    int bcount[8];

    void walk(int depth) {
        if (depth == d) {
            std::uint64_t key = 0;
            for (int b = 0; b < n; ++b) key = key * 8 + static_cast<std::uint64_t>(bcount[b]);
            Partition ct = cycle_type_of(img, n);
            for (int i = 0; i < n; ++i) key = key * 8 + static_cast<std::uint64_t>(i < length(ct) ? ct[static_cast<std::size_t>(i)] : 0);
            ++acc[key];
            return;
        }
        for (auto [a, b] : transpositions) step(a, b, depth);
    }

    void step(int a, int b, int depth) {
        // Left multiplication by (a b) swaps the values a and b in the image list.
        for (int i = 0; i < n; ++i) {
            if (img[i] == a) img[i] = b;
            else if (img[i] == b) img[i] = a;
        }
        ++bcount[b];
        walk(depth + 1);
        --bcount[b];
        for (int i = 0; i < n; ++i) {
            if (img[i] == a) img[i] = b;
            else if (img[i] == b) img[i] = a;
        }
    }
};

std::pair<Partition, Partition> decode(std::uint64_t key, int n) {
    std::vector<int> ct(static_cast<std::size_t>(n)), bc(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        ct[static_cast<std::size_t>(i)] = static_cast<int>(key % 8);
        key /= 8;
    }
    for (int i = n - 1; i >= 0; --i) {
        bc[static_cast<std::size_t>(i)] = static_cast<int>(key % 8);
        key /= 8;
    }
    Partition sig, to;
    for (int x : bc)
        if (x) sig.push_back(x);
    for (int x : ct)
        if (x) to.push_back(x);
    std::sort(sig.begin(), sig.end(), std::greater<>());
    return {sig, to};
}

} // namespace

PathCountMatrix enumerate_paths(int n, int d) {
    if (n < 1 || d < 0) throw error("enumerate_paths needs n >= 1 and d >= 0");
    if (n > kPathMaxN || d > kPathMaxD)
        throw bound_exceeded("path enumeration bound exceeded (n <= " + std::to_string(kPathMaxN) +
                             ", d <= " + std::to_string(kPathMaxD) + ")");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, PathCountMatrix> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({n, d}); it != cache.end()) return it->second;
    }
    std::vector<std::pair<int, int>> trans;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) trans.emplace_back(a, b);
    auto classes = enumerate_partitions(n);
    // One task per (start class, first transposition).
    const std::size_t first = d == 0 ? 1 : trans.size();
    std::vector<std::unordered_map<std::uint64_t, long>> partial(classes.size() * first);
    parallel_for(partial.size(), [&](std::size_t task) {
        const auto& nu = classes[task / first];
        PathWalker w{n, d, trans, {}, {}, {}};
        auto rep = Permutation::of_cycle_type(nu);
        for (int i = 0; i < n; ++i) w.img[i] = rep(i);
        std::fill(std::begin(w.bcount), std::end(w.bcount), 0);
        if (d == 0) {
            w.walk(0);
        } else {
            auto [a, b] = trans[task % first];
            w.step(a, b, 0);
        }
        partial[task] = std::move(w.acc);
    });
    PathCountMatrix m;
    m.n = n;
    m.d = d;
    for (std::size_t task = 0; task < partial.size(); ++task) {
        const auto& nu = classes[task / first];
        long size = class_size(nu).numerator().get_si();
        for (const auto& [key, cnt] : partial[task]) {
            auto [sig, to] = decode(key, n);
            m.counts[{sig, nu, to}] += cnt * size;
        }
    }
    std::lock_guard lock(mutex);
    cache.emplace(std::make_pair(n, d), m);
    return m;
}

std::map<std::pair<Partition, Partition>, Scalar> fd_bruteforce(int n, int d, const WeightFamily& family) {
    PathCountMatrix paths = enumerate_paths(n, d);
    ZSeries w = family.weight_series(static_cast<unsigned>(d));
    std::map<std::pair<Partition, Partition>, Scalar> out;
    auto parts = enumerate_partitions(n);
    Rational inv_nfact = Rational(1) / factorial(n);
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            Scalar s(0);
            for (const auto& lambda : enumerate_partitions(d)) {
                Rational m = paths.normalized(lambda, mu, nu);
                if (m.is_zero()) continue;
                Scalar wl(1);
                for (int j : lambda) wl *= w[static_cast<unsigned>(j)];
                s += wl * Scalar(m);
            }
            out.emplace(std::make_pair(mu, nu), s * Scalar(inv_nfact));
        }
    return out;
}

} // namespace qhurwitz
