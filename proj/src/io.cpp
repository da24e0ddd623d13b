#include "qhurwitz/io.hpp"

#include <cctype>
#include <sstream>

#include "qhurwitz/errors.hpp"

namespace qhurwitz {

Format format_from_name(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "latex") return Format::latex;
    throw error("unknown format '" + name + "'");
}

nlohmann::ordered_json family_to_json(const WeightFamily& family) {
    nlohmann::ordered_json j;
    j["kind"] = family_name(family.kind);
    auto c = nlohmann::ordered_json::array();
    for (const auto& x : family.c) c.push_back(x.to_string());
    j["c"] = c;
    auto params = nlohmann::ordered_json::object();
    for (Param p : kAllParams) {
        if (!family_context(family.kind).contains(p) || !family.params.is_bound(p)) continue;
        params[std::string(param_name(p))] = family.params.value(p).to_string();
    }
    j["params"] = params;
    return j;
}

namespace {

template <typename F>
void for_each_cell(int n, F f) {
    auto parts = enumerate_partitions(n);
    for (const auto& mu : parts)
        for (const auto& nu : parts) f(mu, nu);
}

const Scalar& cell(const HurwitzTable& t, const Partition& mu, const Partition& nu) {
    auto it = t.find({mu, nu});
    if (it == t.end()) throw error("table has no entry for " + to_string(mu) + ", " + to_string(nu));
    return it->second;
}

} // namespace

std::string table_to_json(int n, int d, std::optional<int> e, const WeightFamily& family, const HurwitzTable& table) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["d"] = d;
    if (e) j["e"] = *e;
    j["family"] = family_to_json(family);
    auto entries = nlohmann::ordered_json::array();
    for_each_cell(n, [&](const Partition& mu, const Partition& nu) {
        nlohmann::ordered_json x;
        x["mu"] = mu;
        x["nu"] = nu;
        x["value"] = cell(table, mu, nu).to_string();
        entries.push_back(x);
    });
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

std::string table_to_csv(int n, int d, std::optional<int> e, const HurwitzTable& table) {
    std::ostringstream os;
    os << (e ? "n,d,e,mu,nu,value\n" : "n,d,mu,nu,value\n");
    for_each_cell(n, [&](const Partition& mu, const Partition& nu) {
        os << n << ',' << d << ',';
        if (e) os << *e << ',';
        os << '"' << to_string(mu) << "\",\"" << to_string(nu) << "\",\"" << cell(table, mu, nu).to_string()
           << "\"\n";
    });
    return os.str();
}

std::string partition_to_latex(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

namespace {

std::string latex_term_text(const std::string& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '*') continue;
        if (t[i] == '^') {
            std::size_t j = i + 1;
            if (j < t.size() && t[j] == '-') ++j;
            while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
            out += "^{" + t.substr(i + 1, j - i - 1) + "}";
            i = j - 1;
            continue;
        }
        out += t[i];
    }
    for (std::size_t pos = 0; (pos = out.find("alpha", pos)) != std::string::npos; pos += 7)
        out.replace(pos, 5, "\\alpha ");
    return out;
}

std::string strip_parens(const std::string& t) {
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return t;
    int depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        depth += t[i] == '(' ? 1 : t[i] == ')' ? -1 : 0;
        if (depth == 0 && i + 1 < t.size()) return t;
    }
    return t.substr(1, t.size() - 2);
}

} // namespace

std::string scalar_to_latex(const Scalar& s) {
    std::string text = s.to_string();
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        depth += text[i] == '(' ? 1 : text[i] == ')' ? -1 : 0;
        if (depth == 0 && text[i] == '/')
            return "\\frac{" + latex_term_text(strip_parens(text.substr(0, i))) + "}{" +
                   latex_term_text(strip_parens(text.substr(i + 1))) + "}";
    }
    return latex_term_text(text);
}

std::string table_to_latex(int n, int d, std::optional<int> e, const HurwitzTable& table) {
    auto parts = enumerate_partitions(n);
    std::ostringstream os;
    os << "% n=" << n << ", d=" << d;
    if (e) os << ", e=" << *e;
    os << "\n\\begin{tabular}{c|" << std::string(parts.size(), 'c') << "}\n";
    os << "$\\mu \\backslash \\nu$";
    for (const auto& nu : parts) os << " & $" << partition_to_latex(nu) << "$";
    os << " \\\\\n\\hline\n";
    for (const auto& mu : parts) {
        os << "$" << partition_to_latex(mu) << "$";
        for (const auto& nu : parts) os << " & $" << scalar_to_latex(cell(table, mu, nu)) << "$";
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

std::string format_table(Format f, int n, int d, std::optional<int> e, const WeightFamily& family,
                         const HurwitzTable& table) {
    switch (f) {
    case Format::json: return table_to_json(n, d, e, family, table);
    case Format::csv: return table_to_csv(n, d, e, table);
    case Format::latex: return table_to_latex(n, d, e, table);
    }
    throw error("unknown format");
}

} // namespace qhurwitz
