#include "xxz/harness/tables.hpp"

#include "xxz/closed/closed_forms.hpp"
#include "xxz/det/t_spec.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace xxz {

namespace {

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct EfpTableFamily {
    const char* name;
    EfpFamily family;
};

const EfpTableFamily kEfpFamilies[] = {{"efp-minus", EfpFamily::odd_minus},
                                       {"efp-plus", EfpFamily::odd_plus},
                                       {"efp-e", EfpFamily::even},
                                       {"efp-pseudo", EfpFamily::even_pseudo}};

std::optional<EfpFamily> efp_family(const std::string& name, const std::string& prefix) {
    for (const auto& f : kEfpFamilies)
        if (prefix + std::string(f.name).substr(4) == name) return f.family;
    return std::nullopt;
}

int half_size(EfpFamily f, int N) {
    const bool odd = family_size(f, 1) % 2 == 1;
    if (N < 1 || (N % 2 == 1) != odd) throw std::invalid_argument("chain size " + std::to_string(N) +
                                                                  " has the wrong parity for family " +
                                                                  family_name(f));
    return N / 2;
}

std::vector<int> k_range(const std::vector<int>& ks, int lo, int hi) {
    std::vector<int> out;
    if (ks.empty()) {
        for (int k = lo; k <= hi; ++k) out.push_back(k);
    } else {
        for (int k : ks)
            if (k >= lo && k <= hi) out.push_back(k);
    }
    return out;
}


}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw std::invalid_argument("empty item in list: " + text);
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(part));
            continue;
        }
        int a = to_int(part.substr(0, dots)), b = to_int(part.substr(dots + 2));
        if (b < a) throw std::invalid_argument("empty range: " + part);
        for (int i = a; i <= b; ++i) out.push_back(i);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

const std::vector<std::string>& table_families() {
    static const std::vector<std::string> names = {
        "efp-minus",     "efp-plus",     "efp-e",        "efp-pseudo",  "t-ratio-minus", "t-ratio-plus",
        "t-ratio-e",     "t-ratio-pseudo", "counts-asm", "counts-aht",  "counts-csscpp", "thermo"};
    return names;
}

Table make_table(const std::string& family, const std::vector<int>& Ns, const std::vector<int>& ks,
                 const std::optional<Rational>& t) {
    Table out;
    if (auto f = efp_family(family, "efp-")) {
        out.header = {"N", "k", "value"};
        for (int N : Ns) {
            const int n = half_size(*f, N);
            for (int k : k_range(ks, 0, family_max_k(*f, n)))
                out.rows.push_back({std::to_string(N), std::to_string(k), efp_value(*f, n, k).value.str()});
        }
        return out;
    }
    if (auto f = efp_family(family, "t-ratio-")) {
        if (!t) throw std::invalid_argument("t-ratio tables need --t");
        out.header = {"N", "k", "t", "value"};
        for (int N : Ns) {
            const int n = half_size(*f, N);
            for (int k : k_range(ks, 1, family_max_k(*f, n)))
                out.rows.push_back(
                    {std::to_string(N), std::to_string(k), to_string(*t), t_ratio(*f, n, k).at(*t).str()});
        }
        return out;
    }
    if (family == "counts-asm" || family == "counts-aht") {
        out.header = {"N", "value"};
        for (int N : Ns) {
            if (N < 1) throw std::invalid_argument("counts need N >= 1");
            out.rows.push_back({std::to_string(N), (family == "counts-asm" ? asm_count(N) : aht_count(N)).get_str()});
        }
        return out;
    }
    if (family == "counts-csscpp") {
        out.header = {"n", "k", "value"};
        for (int n : Ns) {
            if (n < 0) throw std::invalid_argument("CSSCPP needs n >= 0");
            for (int k : k_range(ks, 0, n))
                out.rows.push_back({std::to_string(n), std::to_string(k), to_string(cssc_product(n, k))});
        }
        return out;
    }
    if (family == "thermo") {
        out.header = {"k", "value"};
        for (int k : ks.empty() ? Ns : ks) {
            if (k < 0) throw std::invalid_argument("thermo needs k >= 0");
            out.rows.push_back({std::to_string(k), fmt_double(thermo_limit(k))});
        }
        return out;
    }
    throw std::invalid_argument("unknown table family: " + family);
}

Table counts_table(const std::string& family, const std::vector<int>& ns, const std::vector<int>& ks) {
    Table out;
    out.header = {"family", "n", "k", "value"};
    for (int n : ns) {
        if (family == "asm" || family == "aht") {
            if (n < 1) throw std::invalid_argument("counts need n >= 1");
            out.rows.push_back({family, std::to_string(n), "", (family == "asm" ? asm_count(n) : aht_count(n)).get_str()});
        } else if (family == "csscpp" || family == "lgv") {
            if (n < 0) throw std::invalid_argument("CSSCPP needs n >= 0");
            for (int k : k_range(ks, 0, n)) {
                std::string v = family == "lgv" ? lgv_count(n, k).get_str() : to_string(cssc_product(n, k));
                out.rows.push_back({family, std::to_string(n), std::to_string(k), v});
            }
        } else {
            throw std::invalid_argument("unknown counts family: " + family);
        }
    }
    return out;
}

std::string render_table(const Table& t, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::csv:
            for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
            os << '\n';
            for (const auto& r : t.rows) {
                for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
                os << '\n';
            }
            break;
        case OutputFormat::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : t.rows) {
                nlohmann::json o = nlohmann::json::object();
                for (std::size_t i = 0; i < r.size(); ++i) o[t.header[i]] = r[i];
                rows.push_back(o);
            }
            os << rows.dump(2) << '\n';
            break;
        }
        case OutputFormat::text: {
            std::vector<std::size_t> w(t.header.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.header[i].size();
            for (const auto& r : t.rows)
                for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
            auto line = [&](const std::vector<std::string>& r) {
                for (std::size_t i = 0; i < r.size(); ++i) {
                    os << (i ? "  " : "") << r[i];
                    if (i + 1 < r.size()) os << std::string(w[i] - r[i].size(), ' ');
                }
                os << '\n';
            };
            line(t.header);
            for (const auto& r : t.rows) line(r);
            break;
        }
    }
    return os.str();
}

}  // namespace xxz
