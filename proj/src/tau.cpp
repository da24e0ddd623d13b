#include "qhurwitz/tau.hpp"

#include <sstream>

#include <json.hpp>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/io.hpp"
#include "qhurwitz/parallel.hpp"

namespace qhurwitz {

ZSeries r_zero(int N, const WeightFamily& family, unsigned order) {
    ZSeries w = family.weight_series(order);
    ZSeries r = ZSeries::constant(Scalar(1), order);
    if (N >= 1) {
        for (int j = 1; j <= N - 1; ++j) r = r * w.scale_argument(Scalar(N - j));
    } else if (N < 0) {
        const int m = -N;
        for (int j = 1; j <= m; ++j) r = r * w.scale_argument(Scalar(j - m)).inverse();
    }
    return r;
}

ContentProductSeries r_lambda(const Partition& lambda, int N, const WeightFamily& family, unsigned order) {
    if (!is_partition(lambda)) throw error("not a partition: " + to_string(lambda));
    ZSeries w = family.weight_series(order);
    std::vector<ZSeries> factors{r_zero(N, family, order)};
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int a = N + j - static_cast<int>(i);
            if (a != 0) factors.push_back(w.scale_argument(Scalar(a)));
        }
    return {lambda, N, mul_many(factors, order)};
}

std::map<std::pair<Partition, Partition>, Scalar> powersum_from_schur(int n, const std::map<Partition, Scalar, RevLex>& r) {
    const auto& ct = char_table(n);
    std::map<std::pair<Partition, Partition>, Scalar> out;
    for (const auto& mu : ct.irreps)
        for (const auto& nu : ct.irreps) {
            Scalar s(0);
            for (const auto& lambda : ct.irreps) {
                long a = ct.value(lambda, mu) * ct.value(lambda, nu);
                auto it = r.find(lambda);
                if (a == 0 || it == r.end()) continue;
                s += it->second * Scalar(Rational(a));
            }
            out.emplace(std::make_pair(mu, nu), s / Scalar(z_mu(mu) * z_mu(nu)));
        }
    return out;
}

std::map<Partition, Scalar, RevLex> schur_from_powersum(int n, const std::map<std::pair<Partition, Partition>, Scalar>& f) {
    const auto& ct = char_table(n);
    std::map<Partition, Scalar, RevLex> out;
    for (const auto& lambda : ct.irreps) {
        Scalar s(0);
        for (const auto& [key, v] : f) {
            long a = ct.value(lambda, key.first) * ct.value(lambda, key.second);
            if (a != 0) s += v * Scalar(Rational(a));
        }
        out.emplace(lambda, s);
    }
    return out;
}

TauTable tau_tables(int n_max, int d_max, int N, const WeightFamily& family) {
    if (n_max < 1 || d_max < 0) throw error("tau_tables needs n_max >= 1 and d_max >= 0");
    if (n_max > kTauMaxN || d_max > kTauMaxD)
        throw bound_exceeded("n exceeds enumeration bound (n_max <= " + std::to_string(kTauMaxN) +
                             ", d_max <= " + std::to_string(kTauMaxD) + ")");
    TauTable t;
    t.N = N;
    t.n_max = n_max;
    t.d_max = d_max;
    t.family = family;
    std::vector<Partition> all;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lambda : enumerate_partitions(n)) all.push_back(lambda);
    std::vector<ZSeries> series(all.size());
    parallel_for(all.size(), [&](std::size_t i) {
        series[i] = r_lambda(all[i], N, family, static_cast<unsigned>(d_max)).series;
    });
    for (std::size_t i = 0; i < all.size(); ++i) t.schur.emplace(all[i], series[i]);
    for (int n = 1; n <= n_max; ++n)
        for (int d = 0; d <= d_max; ++d) {
            std::map<Partition, Scalar, RevLex> r;
            for (const auto& lambda : enumerate_partitions(n))
                r.emplace(lambda, t.schur.at(lambda)[static_cast<unsigned>(d)]);
            for (auto& [key, v] : powersum_from_schur(n, r)) t.powersum.emplace(std::make_tuple(d, key.first, key.second), v);
        }
    return t;
}

std::string TauTable::to_json() const {
    nlohmann::ordered_json j;
    j["N"] = N;
    j["n_max"] = n_max;
    j["d_max"] = d_max;
    j["family"] = family_to_json(family);
    auto schur_arr = nlohmann::ordered_json::array();
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            nlohmann::ordered_json e;
            e["lambda"] = lambda;
            auto coeffs = nlohmann::ordered_json::array();
            for (const auto& c : schur.at(lambda).coeffs()) coeffs.push_back(c.to_string());
            e["series"] = coeffs;
            schur_arr.push_back(e);
        }
    j["schur"] = schur_arr;
    auto ps = nlohmann::ordered_json::array();
    for (int n = 1; n <= n_max; ++n)
        for (int d = 0; d <= d_max; ++d)
            for (const auto& mu : enumerate_partitions(n))
                for (const auto& nu : enumerate_partitions(n)) {
                    nlohmann::ordered_json e;
                    e["d"] = d;
                    e["mu"] = mu;
                    e["nu"] = nu;
                    e["value"] = powersum.at({d, mu, nu}).to_string();
                    ps.push_back(e);
                }
    j["powersum"] = ps;
    return j.dump(2) + "\n";
}

std::string TauTable::to_latex() const {
    std::ostringstream os;
    for (int n = 1; n <= n_max; ++n)
        for (int d = 0; d <= d_max; ++d) {
            HurwitzTable block;
            for (const auto& mu : enumerate_partitions(n))
                for (const auto& nu : enumerate_partitions(n)) block.emplace(std::make_pair(mu, nu), powersum.at({d, mu, nu}));
            os << table_to_latex(n, d, std::nullopt, block) << "\n";
        }
    return os.str();
}

} // namespace qhurwitz
