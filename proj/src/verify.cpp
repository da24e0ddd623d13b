#include "qhurwitz/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/family.hpp"
#include "qhurwitz/group_algebra.hpp"
#include "qhurwitz/hurwitz.hpp"
#include "qhurwitz/symfunc.hpp"
#include "qhurwitz/tau.hpp"

namespace qhurwitz {

const std::vector<std::string>& verify_names() {
    static const std::vector<std::string> names{
        "theorem-combinatorial", "theorem-geometric", "gj-cycle-sums", "lemma-paths", "macdonald-kernel",
        "pochhammer",            "pure-hurwitz",      "specializations", "determinism"};
    return names;
}

namespace {

bool scalar_equal(const Scalar& a, const Scalar& b) {
    Context u = Context::from_mask(a.context().mask() | b.context().mask());
    return a.with_context(u) == b.with_context(u);
}

std::string c_string(const std::vector<Rational>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].to_string();
    return s + ")";
}

std::string point_string(const ParamSpace& ps) {
    if (!ps.is_numeric()) return "symbolic";
    std::string s;
    for (Param p : kAllParams) {
        if (!ps.is_bound(p)) continue;
        if (!s.empty()) s += ",";
        s += std::string(param_name(p)) + "=" + ps.value(p).to_string();
    }
    return s;
}

class Recorder {
public:
    explicit Recorder(VerifyResult& r) : r_(r) {}
    void check(bool ok, const std::string& what, const std::string& detail = "") {
        r_.report += (ok ? "[ok]   " : "[FAIL] ") + what + (detail.empty() ? "" : ": " + detail) + "\n";
        if (!ok && r_.ok) r_.counterexample = what + (detail.empty() ? "" : ": " + detail);
        r_.ok = r_.ok && ok;
    }
    // Runs body, turning an exception into a failed item.
    void guard(const std::string& what, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, what, std::string("exception: ") + e.what());
        }
    }

private:
    VerifyResult& r_;
};

std::vector<std::vector<Rational>> c_lists(const VerifyOptions& o) {
    if (!o.c_lists.empty()) return o.c_lists;
    return {{Rational(1)}, {Rational(1), Rational(1, 2)}};
}

std::vector<int> n_range(int lo, int hi) {
    std::vector<int> r;
    for (int n = std::min(lo, hi); n <= hi; ++n) r.push_back(n);
    return r;
}

std::vector<ParamSpace> random_points(Context ctx, int trials, std::mt19937_64& rng) {
    std::vector<ParamSpace> pts;
    for (int i = 0; i < trials; ++i) pts.push_back(ParamSpace::random_point(ctx, rng));
    return pts;
}

std::string cell_name(int n, int d, const Partition& mu, const Partition& nu) {
    return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " mu=" + to_string(mu) + " nu=" + to_string(nu);
}

// 1
VerifyResult theorem_combinatorial(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    const int nmax = o.n.value_or(4), dmax = o.dmax.value_or(3);
    std::mt19937_64 rng(o.seed);
    auto points = random_points(Context{Param::q, Param::t}, o.trials, rng);
    for (const auto& c : c_lists(o))
        for (int n : n_range(2, nmax)) {
            std::vector<ParamSpace> pts = n <= 3 ? std::vector<ParamSpace>{ParamSpace()} : points;
            for (const auto& ps : pts) {
                WeightFamily fam(FamilyKind::macdonald, c, ps);
                rec.guard("n=" + std::to_string(n) + " c=" + c_string(c) + " at " + point_string(ps), [&] {
                    TauTable tau = tau_tables(n, dmax, 0, fam);
                    for (int d = 0; d <= dmax; ++d) {
                        auto a = fd_character(n, d, fam);
                        auto b = fd_bruteforce(n, d, fam);
                        for (const auto& [key, va] : a) {
                            const Scalar& vb = b.at(key);
                            const Scalar& vt = tau.powersum.at({d, key.first, key.second});
                            bool ok = va == vb && va == vt;
                            rec.check(ok,
                                      cell_name(n, d, key.first, key.second) + " c=" + c_string(c) + " point=" +
                                          point_string(ps),
                                      ok ? va.to_string()
                                         : "character " + va.to_string() + ", paths " + vb.to_string() + ", tau " +
                                               vt.to_string());
                        }
                    }
                });
            }
        }
    return res;
}

// 2
VerifyResult theorem_geometric(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    const int nmax = o.n.value_or(4), dmax = o.dmax.value_or(3);
    for (const auto& c : c_lists(o))
        for (int n : n_range(2, nmax))
            for (int d = 0; d <= dmax; ++d) {
                WeightFamily fam(FamilyKind::macdonald, c);
                rec.guard("n=" + std::to_string(n) + " d=" + std::to_string(d) + " c=" + c_string(c), [&] {
                    auto f = fd_character(n, d, fam);
                    std::vector<HurwitzTable> h;
                    for (int e = 0; e <= d; ++e) h.push_back(hde_geometric(n, d, e, fam));
                    for (const auto& [key, v] : f) {
                        std::string name = cell_name(n, d, key.first, key.second) + " c=" + c_string(c);
                        std::vector<Scalar> coeffs;
                        try {
                            coeffs = v.coefficients_in(Param::t);
                        } catch (const error&) {
                            rec.check(false, name, "not a polynomial in t: " + v.to_string());
                            continue;
                        }
                        bool ok = static_cast<int>(coeffs.size()) <= d + 1;
                        std::string detail = "degree in t " + std::to_string(coeffs.size() - 1);
                        for (int e = 0; e <= d && ok; ++e) {
                            Scalar ce = e < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(e)]
                                                                            : Scalar(0);
                            const Scalar& he = h[static_cast<std::size_t>(e)].at(key);
                            if (!scalar_equal(ce, he)) {
                                ok = false;
                                detail = "e=" + std::to_string(e) + ": coefficient " + ce.to_string() +
                                         ", geometric " + he.to_string();
                            }
                        }
                        rec.check(ok, name, ok ? v.to_string() : detail);
                    }
                });
            }
    return res;
}

// 3
VerifyResult gj_cycle_sums(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    const int nmax = o.n.value_or(4), jmax = o.dmax.value_or(3);
    std::mt19937_64 rng(o.seed);
    auto points = random_points(Context{Param::q, Param::t}, o.trials, rng);
    for (int n : n_range(2, nmax)) {
        std::vector<ParamSpace> pts = n <= 3 ? std::vector<ParamSpace>{ParamSpace()} : points;
        for (int j = 1; j <= jmax; ++j)
            for (const auto& ps : pts) {
                std::string name = "n=" + std::to_string(n) + " j=" + std::to_string(j) + " point=" + point_string(ps);
                rec.guard(name, [&] {
                    auto r = gj_cycle_expansion_check(n, j, ps);
                    std::string detail;
                    std::istringstream lines(r.report);
                    for (std::string line; std::getline(lines, line);) {
                        if (r.ok || line.find("!=") != std::string::npos) detail += (detail.empty() ? "" : "; ") + line;
                        if (!r.ok && !detail.empty()) break;
                    }
                    rec.check(r.ok, name, detail);
                });
            }
    }
    return res;
}

// 4
VerifyResult lemma_paths(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    const int nmax = o.n.value_or(4), dmax = o.dmax.value_or(3);
    for (int n : n_range(1, nmax))
        for (int d = 0; d <= dmax; ++d) {
            rec.guard("n=" + std::to_string(n) + " d=" + std::to_string(d), [&] {
                PathCountMatrix paths = enumerate_paths(n, d);
                for (const auto& lambda : enumerate_partitions(d)) {
                    CentralElement m = jm_symmetric_apply(SymFunc::element(Basis::m, lambda), n);
                    for (const auto& mu : enumerate_partitions(n)) {
                        CentralElement lhs = central_multiply(m, CentralElement::class_sum(mu));
                        CentralElement rhs(n, CentralBasis::C);
                        for (const auto& nu : enumerate_partitions(n))
                            rhs.add(nu, Scalar(paths.normalized(lambda, nu, mu) * z_mu(nu) / factorial(n)));
                        bool ok = lhs == rhs;
                        rec.check(ok,
                                  "n=" + std::to_string(n) + " lambda=" + to_string(lambda) + " mu=" + to_string(mu),
                                  ok ? rhs.to_string()
                                     : "eigenvalues " + lhs.convert(CentralBasis::C).to_string() + ", paths " +
                                           rhs.to_string());
                    }
                }
            });
        }
    return res;
}

SymFunc schur_from_characters(const Partition& lambda, const ParamSpace& ps) {
    const int n = weight(lambda);
    SymFunc f(n, Basis::p, ps);
    for (const auto& mu : enumerate_partitions(n))
        f.add(mu, Scalar(Rational(character(lambda, mu)) / z_mu(mu)));
    return f;
}

// 5
VerifyResult macdonald_kernel(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    const int nmax = o.n.value_or(6);
    const ParamSpace sym;
    for (int n : n_range(1, nmax)) {
        rec.guard("degree " + std::to_string(n) + " triangularity and orthogonality", [&] {
            auto parts = enumerate_partitions(n);
            for (const auto& lambda : parts) {
                SymFunc p = macdonald_P(lambda, sym);
                bool ok = p.coeff(lambda).is_one();
                for (const auto& [nu, c] : p.coeffs())
                    if (nu != lambda && !c.is_zero() && !dominance_less(nu, lambda)) ok = false;
                rec.check(ok, "P" + to_string(lambda) + " unitriangular in m");
            }
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j) {
                    Scalar s = scalar_product_qt(macdonald_P(parts[i], sym), macdonald_P(parts[j], sym));
                    rec.check(s.is_zero(), "(P" + to_string(parts[i]) + ", P" + to_string(parts[j]) + ") = 0",
                              s.is_zero() ? "" : s.to_string());
                }
        });
    }
    ParamSpace qt(Context{Param::q});
    qt.bind(Param::t, Scalar::param(Context{Param::q}, Param::q));
    for (int n : n_range(1, std::min(nmax, 5)))
        rec.guard("degree " + std::to_string(n) + " at t=q", [&] {
            for (const auto& lambda : enumerate_partitions(n)) {
                SymFunc p = macdonald_P(lambda, qt).convert(Basis::p);
                SymFunc s = schur_from_characters(lambda, qt);
                rec.check(p == s, "P" + to_string(lambda) + "(q,q) = s" + to_string(lambda));
            }
        });
    ParamSpace hl(Context{Param::t});
    hl.bind(Param::q, Scalar(0));
    for (int n : n_range(1, std::min(nmax, 5)))
        rec.guard("degree " + std::to_string(n) + " at q=0", [&] {
            auto parts = enumerate_partitions(n);
            for (const auto& nu : parts) {
                SymFunc lhs(n, Basis::p, hl);
                for (const auto& lambda : parts) {
                    Scalar c = macdonald_P(lambda, hl).coeff(nu);
                    if (c.is_zero()) continue;
                    lhs += macdonald_P(lambda, hl).convert(Basis::p).scaled(macdonald_b(lambda, hl) * c);
                }
                SymFunc rhs = SymFunc::element(Basis::hl_q, nu, hl).convert(Basis::p);
                rec.check(lhs == rhs, "sum_lambda b_lambda P_lambda [m" + to_string(nu) + "]P_lambda = q" +
                                          to_string(nu) + "(t) at q=0");
            }
        });
    for (int n : n_range(1, std::min(nmax, 4)))
        rec.guard("degree " + std::to_string(n) + " Cauchy kernel", [&] {
            auto parts = enumerate_partitions(n);
            std::vector<SymFunc> pp;
            std::vector<Scalar> b;
            for (const auto& lambda : parts) {
                pp.push_back(macdonald_P(lambda, sym).convert(Basis::p));
                b.push_back(macdonald_b(lambda, sym));
            }
            for (const auto& mu : parts)
                for (const auto& nu : parts) {
                    Scalar s(0);
                    for (std::size_t i = 0; i < parts.size(); ++i) s += b[i] * pp[i].coeff(mu) * pp[i].coeff(nu);
                    Scalar expect = mu == nu ? z_mu_qt(mu, sym).inverse() : Scalar(0);
                    rec.check(s == expect, "Cauchy [p" + to_string(mu) + " p" + to_string(nu) + "] degree " +
                                               std::to_string(n));
                }
        });
    return res;
}

// 6
VerifyResult pochhammer(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    const int nmax = o.n.value_or(6);
    const Context cu{Param::u};
    const Scalar u = Scalar::param(cu, Param::u);
    for (int n : n_range(1, nmax))
        for (const auto& lambda : enumerate_partitions(n)) {
            rec.guard("lambda=" + to_string(lambda), [&] {
                Scalar lhs = pochhammer_partition(lambda);
                Scalar s = SymFunc::element(Basis::s, lambda, ParamSpace(cu)).eval_powersums([&](int) { return u; });
                Scalar rhs = s * Scalar(hook_product(lambda));
                bool ok = scalar_equal(lhs, rhs);
                rec.check(ok, "(u)_" + to_string(lambda), ok ? lhs.to_string() : lhs.to_string() + " vs " + rhs.to_string());
            });
        }
    return res;
}

// Multisets of k classes of S_n, as index sequences into the partition list.
void multisets(std::size_t count, int k, std::vector<std::size_t>& cur, std::size_t from,
               const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (static_cast<int>(cur.size()) == k) {
        f(cur);
        return;
    }
    for (std::size_t i = from; i < count; ++i) {
        cur.push_back(i);
        multisets(count, k, cur, i, f);
        cur.pop_back();
    }
}

// 7
VerifyResult pure_hurwitz_suite(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    const int nmax = o.n.value_or(4);
    struct Known {
        std::vector<Partition> profiles;
        int n;
        Rational value;
    };
    for (const auto& k : std::vector<Known>{{{{2}, {2}}, 2, Rational(1, 2)},
                                            {{{3}, {3}}, 3, Rational(1, 3)},
                                            {{{2}, {2}, {2}}, 2, Rational(0)}}) {
        std::string name;
        for (const auto& p : k.profiles) name += to_string(p);
        Rational v = pure_hurwitz(k.profiles, k.n);
        rec.check(v == k.value, "H" + name + " = " + k.value.to_string(), v.to_string());
    }
    for (int n : n_range(1, nmax)) {
        auto parts = enumerate_partitions(n);
        for (int k = 1; k <= 4; ++k) {
            std::vector<std::size_t> cur;
            multisets(parts.size(), k, cur, 0, [&](const std::vector<std::size_t>& idx) {
                std::vector<Partition> prof;
                std::string name;
                for (auto i : idx) {
                    prof.push_back(parts[i]);
                    name += to_string(parts[i]);
                }
                Rational a = pure_hurwitz(prof, n);
                Rational b = factorization_hurwitz(prof, n);
                rec.check(a == b, "n=" + std::to_string(n) + " H" + name,
                          a == b ? a.to_string() : "Frobenius " + a.to_string() + ", count " + b.to_string());
            });
        }
    }
    return res;
}

ZSeries geometric_product(const std::vector<Rational>& c, unsigned order) {
    std::vector<ZSeries> f;
    for (const auto& ci : c) {
        std::vector<Scalar> coeffs;
        for (unsigned k = 0; k <= order; ++k) coeffs.push_back(Scalar(ci.pow(k)));
        f.push_back(ZSeries::from_coeffs(coeffs, order));
    }
    return mul_many(f, order);
}

std::string series_string(const ZSeries& s) {
    std::string out = "[";
    for (unsigned k = 0; k <= s.order(); ++k) out += (k ? ", " : "") + s[k].to_string();
    return out + "]";
}

bool tables_equal(const HurwitzTable& a, const HurwitzTable& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, v] : a)
        if (!scalar_equal(v, b.at(k))) return false;
    return true;
}

// 8
VerifyResult specializations(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    const unsigned D = static_cast<unsigned>(o.dmax.value_or(3));
    const int nmax = o.n.value_or(3);
    const Scalar q = Scalar::param(Context{Param::q}, Param::q);
    for (const auto& c : c_lists(o)) {
        const std::string cs = " c=" + c_string(c);
        rec.guard("t=0" + cs, [&] {
            ParamSpace t0(Context{Param::q});
            t0.bind(Param::t, Scalar(0));
            WeightFamily mac(FamilyKind::macdonald, c, t0);
            WeightFamily com(FamilyKind::complete, c);
            ZSeries a = mac.weight_series(D), b = com.weight_series(D);
            rec.check(a == b, "macdonald(t=0) weights = complete weights" + cs, series_string(a));
            for (int n : n_range(1, nmax))
                for (int d = 0; d <= static_cast<int>(D); ++d)
                    rec.check(tables_equal(fd_character(n, d, mac), fd_character(n, d, com)),
                              "F^d macdonald(t=0) = F^d complete n=" + std::to_string(n) + " d=" + std::to_string(d) + cs);
        });
        rec.guard("elementary limit" + cs, [&] {
            WeightFamily mac(FamilyKind::macdonald, c);
            WeightFamily ele(FamilyKind::elementary, c);
            ZSeries g = mac.weight_series(D), e = ele.weight_series(D);
            for (unsigned j = 0; j <= D; ++j) {
                auto coeffs = g[j].coefficients_in(Param::t);
                Scalar lead = j < coeffs.size() ? coeffs[j] : Scalar(0);
                if (j % 2) lead = -lead;
                bool ok = scalar_equal(lead, e[j]);
                rec.check(ok, "e_" + std::to_string(j) + " = (-1)^j [t^j] g_j" + cs,
                          ok ? e[j].to_string() : e[j].to_string() + " vs " + lead.to_string());
            }
        });
        rec.guard("jack alpha=1" + cs, [&] {
            ParamSpace a1{Context()};
            a1.bind(Param::alpha, Scalar(1));
            WeightFamily jack(FamilyKind::jack, c, a1);
            ZSeries a = jack.weight_series(D), b = geometric_product(c, D);
            rec.check(a == b, "jack(alpha=1) weights = prod (1 - z c_i)^{-1}" + cs, series_string(a));
        });
        rec.guard("t=q" + cs, [&] {
            ParamSpace tq(Context{Param::q});
            tq.bind(Param::t, q);
            WeightFamily mac(FamilyKind::macdonald, c, tq);
            WeightFamily cla(FamilyKind::classical, c);
            rec.check(mac.weight_series(D) == geometric_product(c, D), "macdonald(t=q) weights = h_j(c)" + cs);
            for (int n : n_range(1, nmax))
                for (int d = 0; d <= static_cast<int>(D); ++d)
                    rec.check(tables_equal(fd_character(n, d, mac), fd_character(n, d, cla)),
                              "F^d macdonald(t=q) = F^d classical n=" + std::to_string(n) + " d=" + std::to_string(d) + cs);
        });
        rec.guard("q=0" + cs, [&] {
            ParamSpace q0(Context{Param::t});
            q0.bind(Param::q, Scalar(0));
            WeightFamily mac(FamilyKind::macdonald, c, q0);
            WeightFamily hl(FamilyKind::hall_littlewood, c);
            rec.check(mac.weight_series(D) == hl.weight_series(D), "macdonald(q=0) weights = hall_littlewood weights" + cs);
        });
    }
    return res;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return out + "'";
}

// 9
VerifyResult determinism(const VerifyOptions& o) {
    VerifyResult res;
    Recorder rec(res);
    if (o.cli_path.empty()) {
        rec.check(false, "determinism", "no qhurwitz executable configured");
        return res;
    }
    namespace fs = std::filesystem;
    fs::path dir = o.work_dir.empty() ? fs::temp_directory_path() / "qhurwitz-determinism" : fs::path(o.work_dir);
    fs::create_directories(dir);
    const std::vector<std::string> commands{
        "chars --n 5 --format json",
        "chars --n 4 --format csv",
        "macdonald --n 3 --format json",
        "weights --family macdonald --c 1,1/2 --dmax 3",
        "weights --family jack --c 1,2 --dmax 3 --format csv",
        "fd --n 3 --dmax 2 --family macdonald --c 1 --mode symbolic --format json",
        "fd --n 4 --dmax 3 --family macdonald --c 1,1/2 --mode numeric --seed 7 --format csv",
        "fd --n 3 --dmax 2 --route paths --family complete --c 1,1/3 --format latex",
        "hde --n 3 --dmax 2 --family macdonald --c 1,1/2 --format json",
        "tau --nmax 3 --dmax 2 --N 0 --family macdonald --c 1 --format json",
        "tau --nmax 2 --dmax 2 --N -1 --family elementary --c 1 --format latex",
        "verify pure-hurwitz --n 3",
    };
    int idx = 0;
    for (const auto& cmd : commands) {
        ++idx;
        fs::path a = dir / ("run" + std::to_string(idx) + "a.out");
        fs::path b = dir / ("run" + std::to_string(idx) + "b.out");
        fs::path cache = dir / "cache";
        auto run = [&](const fs::path& out) {
            std::string line = quote(o.cli_path) + " " + cmd + " --cache-dir " + quote(cache.string()) + " --out " +
                               quote(out.string()) + " > /dev/null 2>&1";
            return std::system(line.c_str());
        };
        int ra = run(a), rb = run(b);
        bool ok = ra == 0 && rb == 0 && fs::exists(a) && fs::exists(b) && read_file(a) == read_file(b) &&
                  !read_file(a).empty();
        rec.check(ok, "qhurwitz " + cmd,
                  ok ? std::to_string(fs::file_size(a)) + " identical bytes"
                     : "exit codes " + std::to_string(ra) + "/" + std::to_string(rb) + " or outputs differ");
    }
    return res;
}

} // namespace

Rational factorization_hurwitz(const std::vector<std::vector<int>>& profiles, int n) {
    if (profiles.empty()) throw error("need at least one profile");
    std::vector<std::vector<Permutation>> classes;
    auto perms = all_permutations(n);
    for (const auto& p : profiles) {
        if (weight(p) != n) throw weight_mismatch("profile of wrong weight");
        std::vector<Permutation> cls;
        for (const auto& g : perms)
            if (g.cycle_type() == p) cls.push_back(g);
        classes.push_back(std::move(cls));
    }
    const std::size_t k = profiles.size();
    long count = 0;
    std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t i, const Permutation& prod) {
        if (i + 1 == k) {
            // The last factor is forced to be prod^{-1}, which has the cycle type of prod.
            if (prod.cycle_type() == profiles.back()) ++count;
            return;
        }
        for (const auto& g : classes[i]) rec(i + 1, prod * g);
    };
    rec(0, Permutation(n));
    return Rational(count) / factorial(n);
}

VerifyResult run_verify(const std::string& name, const VerifyOptions& opts) {
    if (name == "theorem-combinatorial") return theorem_combinatorial(opts);
    if (name == "theorem-geometric") return theorem_geometric(opts);
    if (name == "gj-cycle-sums") return gj_cycle_sums(opts);
    if (name == "lemma-paths") return lemma_paths(opts);
    if (name == "macdonald-kernel") return macdonald_kernel(opts);
    if (name == "pochhammer") return pochhammer(opts);
    if (name == "pure-hurwitz") return pure_hurwitz_suite(opts);
    if (name == "specializations") return specializations(opts);
    if (name == "determinism") return determinism(opts);
    throw error("unknown verification '" + name + "'");
}

} // namespace qhurwitz
