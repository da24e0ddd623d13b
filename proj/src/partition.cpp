#include "qhurwitz/partition.hpp"

#include <algorithm>

#include "qhurwitz/errors.hpp"
#include "qhurwitz/params.hpp"

namespace qhurwitz {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

Partition make_partition(std::vector<int> parts) {
    if (!is_partition(parts)) throw error("not a partition: " + to_string(parts));
    return parts;
}

int weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

std::string to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

namespace {

void enumerate_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        enumerate_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int bound) {
    if (n < 0) throw error("negative partition weight");
    if (n > bound)
        throw bound_exceeded("n exceeds enumeration bound (" + std::to_string(n) + " > " +
                             std::to_string(bound) + ")");
    std::vector<Partition> out;
    Partition cur;
    enumerate_rec(n, n, cur, out);
    return out;
}

bool dominance_less(const Partition& mu, const Partition& lambda) {
    if (weight(mu) != weight(lambda))
        throw weight_mismatch("dominance requires equal weights: " + to_string(mu) + " vs " + to_string(lambda));
    if (mu == lambda) return false;
    int a = 0, b = 0;
    for (std::size_t i = 0; i < std::max(mu.size(), lambda.size()); ++i) {
        if (i < mu.size()) a += mu[i];
        if (i < lambda.size()) b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

std::map<int, int> multiplicities(const Partition& p) {
    std::map<int, int> m;
    for (int x : p) ++m[x];
    return m;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

Partition merge(const Partition& a, const Partition& b) {
    Partition r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end(), std::greater<>());
    return r;
}

Rational z_mu(const Partition& mu) {
    Rational z(1);
    for (auto [i, m] : multiplicities(mu)) z *= Rational(i).pow(m) * factorial(m);
    return z;
}

Scalar n_mu_qt(const Partition& mu, const ParamSpace& ps) {
    Scalar r(1);
    for (int k : mu) r *= (Scalar(1) - ps.q().pow(k)) / (Scalar(1) - ps.t().pow(k));
    return r;
}

Scalar z_mu_qt(const Partition& mu, const ParamSpace& ps) { return Scalar(z_mu(mu)) * n_mu_qt(mu, ps); }

Scalar z_mu_qt(const Partition& mu) { return z_mu_qt(mu, ParamSpace(Context{Param::q, Param::t})); }

Rational class_size(const Partition& mu) { return factorial(weight(mu)) / z_mu(mu); }

std::vector<int> contents(const Partition& lambda) {
    std::vector<int> c;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) c.push_back(j - static_cast<int>(i));
    return c;
}

int colength(const Partition& mu) { return weight(mu) - length(mu); }

Rational aut_order(const Partition& lambda) {
    Rational a(1);
    for (auto [i, m] : multiplicities(lambda)) a *= factorial(m);
    return a;
}

Rational hook_product(const Partition& lambda) {
    const int l = length(lambda);
    std::vector<std::vector<Rational>> a(l, std::vector<Rational>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int k = lambda[i] - i + j;
            a[i][j] = k < 0 ? Rational(0) : Rational(1) / factorial(k);
        }
    Rational det(1);
    for (int col = 0; col < l; ++col) {
        int piv = col;
        while (piv < l && a[piv][col].is_zero()) ++piv;
        if (piv == l) throw error("singular hook determinant");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < l; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (int j = col; j < l; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return Rational(1) / det;
}

Scalar pochhammer_partition(const Partition& lambda) {
    Context ctx{Param::u};
    Scalar u = Scalar::param(ctx, Param::u);
    Scalar r = Scalar(Poly::constant(ctx, Rational(1)));
    for (int c : contents(lambda)) r *= u + Scalar(c);
    return r;
}

} // namespace qhurwitz
