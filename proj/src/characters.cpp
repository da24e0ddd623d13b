#include "qhurwitz/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qhurwitz/errors.hpp"

namespace qhurwitz {

namespace {

using Key = std::pair<Partition, Partition>;

// Beta set of λ padded to length l.
std::vector<int> beta_set(const Partition& lambda, int l) {
    std::vector<int> b(l);
    for (int i = 0; i < l; ++i) b[i] = (i < length(lambda) ? lambda[i] : 0) + (l - 1 - i);
    return b;
}

Partition from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<>());
    const int l = static_cast<int>(b.size());
    Partition p;
    for (int i = 0; i < l; ++i) {
        int part = b[i] - (l - 1 - i);
        if (part > 0) p.push_back(part);
    }
    return p;
}

class MNEvaluator {
public:
    long eval(const Partition& lambda, const Partition& mu) {
        if (mu.empty()) return lambda.empty() ? 1 : 0;
        Key key{lambda, mu};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int r = mu.front();
        Partition rest(mu.begin() + 1, mu.end());
        const int l = length(lambda);
        std::vector<int> b = beta_set(lambda, l);
        std::set<int> present(b.begin(), b.end());
        long total = 0;
        for (int i = 0; i < l; ++i) {
            int target = b[i] - r;
            if (target < 0 || present.count(target)) continue;
            int between = 0;
            for (int x : b)
                if (x > target && x < b[i]) ++between;
            std::vector<int> nb = b;
            nb[i] = target;
            long sub = eval(from_beta(nb), rest);
            total += (between % 2 ? -sub : sub);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<Key, long> memo_;
};

std::mutex g_mutex;
std::map<int, std::unique_ptr<CharacterTable>> g_tables;
std::optional<std::filesystem::path> g_cache_dir;
bool g_cache_dir_set = false;

std::filesystem::path table_file(const std::filesystem::path& dir, int n) {
    return dir / ("chars_n" + std::to_string(n) + ".json");
}

bool consistent(const CharacterTable& t, int n) {
    if (t.n != n) return false;
    auto parts = enumerate_partitions(n, std::max(n, kDefaultPartitionBound));
    if (t.irreps.size() != parts.size() || t.classes.size() != parts.size()) return false;
    if (t.chi.size() != parts.size()) return false;
    for (const auto& row : t.chi)
        if (row.size() != parts.size()) return false;
    return true;
}

} // namespace

long character(const Partition& lambda, const Partition& mu) {
    if (weight(lambda) != weight(mu))
        throw weight_mismatch("character needs |λ| = |μ|: " + to_string(lambda) + " vs " + to_string(mu));
    MNEvaluator ev;
    return ev.eval(lambda, mu);
}

std::size_t CharacterTable::irrep_index(const Partition& lambda) const {
    auto it = std::find(irreps.begin(), irreps.end(), lambda);
    if (it == irreps.end()) throw error("no irrep " + to_string(lambda) + " for n=" + std::to_string(n));
    return static_cast<std::size_t>(it - irreps.begin());
}

std::size_t CharacterTable::class_index(const Partition& mu) const {
    auto it = std::find(classes.begin(), classes.end(), mu);
    if (it == classes.end()) throw error("no class " + to_string(mu) + " for n=" + std::to_string(n));
    return static_cast<std::size_t>(it - classes.begin());
}

std::string CharacterTable::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["classes"] = classes;
    j["irreps"] = irreps;
    j["chi"] = chi;
    return j.dump();
}

CharacterTable CharacterTable::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    CharacterTable t;
    t.n = j.at("n").get<int>();
    t.classes = j.at("classes").get<std::vector<Partition>>();
    t.irreps = j.at("irreps").get<std::vector<Partition>>();
    t.chi = j.at("chi").get<std::vector<std::vector<long>>>();
    return t;
}

CharacterTable compute_char_table(int n) {
    CharacterTable t;
    t.n = n;
    t.irreps = enumerate_partitions(n, std::max(n, kDefaultPartitionBound));
    t.classes = t.irreps;
    std::reverse(t.classes.begin(), t.classes.end());
    MNEvaluator ev;
    for (const auto& lambda : t.irreps) {
        std::vector<long> row;
        for (const auto& mu : t.classes) row.push_back(ev.eval(lambda, mu));
        t.chi.push_back(std::move(row));
    }
    return t;
}

void set_cache_dir(const std::filesystem::path& dir) {
    std::lock_guard lock(g_mutex);
    g_cache_dir = dir;
    g_cache_dir_set = true;
}

std::filesystem::path cache_dir() {
    std::lock_guard lock(g_mutex);
    if (g_cache_dir_set && g_cache_dir) return *g_cache_dir;
    if (const char* env = std::getenv("QHURWITZ_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "qhurwitz";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "qhurwitz";
    return {};
}

int clear_cache() {
    auto dir = cache_dir();
    int removed = 0;
    if (!dir.empty() && std::filesystem::is_directory(dir)) {
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            auto name = entry.path().filename().string();
            if (name.rfind("chars_n", 0) == 0 && entry.path().extension() == ".json") {
                std::filesystem::remove(entry.path());
                ++removed;
            }
        }
    }
    return removed;
}

const CharacterTable& char_table(int n, int bound) {
    if (n < 0) throw error("negative n");
    if (n > bound)
        throw bound_exceeded("n exceeds character table bound (" + std::to_string(n) + " > " +
                             std::to_string(bound) + ")");
    auto dir = cache_dir();
    std::lock_guard lock(g_mutex);
    if (auto it = g_tables.find(n); it != g_tables.end()) return *it->second;
    std::unique_ptr<CharacterTable> table;
    if (!dir.empty()) {
        std::ifstream in(table_file(dir, n));
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                auto t = CharacterTable::from_json(ss.str());
                if (consistent(t, n)) table = std::make_unique<CharacterTable>(std::move(t));
            } catch (const std::exception&) {
            }
        }
    }
    if (!table) {
        table = std::make_unique<CharacterTable>(compute_char_table(n));
        if (!dir.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (!ec) {
                auto path = table_file(dir, n);
                auto tmp = path;
                tmp += ".tmp";
                {
                    std::ofstream out(tmp);
                    out << table->to_json() << "\n";
                }
                std::filesystem::rename(tmp, path, ec);
            }
        }
    }
    auto& ref = *table;
    g_tables.emplace(n, std::move(table));
    return ref;
}

Rational central_character(const Partition& lambda, const Partition& mu) {
    return hook_product(lambda) * Rational(character(lambda, mu)) / z_mu(mu);
}

} // namespace qhurwitz
