#include <planecert/character_table.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace planecert {

namespace {

struct MemoKey {
    std::vector<int> mu;
    std::vector<int> lambda;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
        for (int p : k.mu) mix(static_cast<std::size_t>(p));
        mix(0xffffffffull);
        for (int p : k.lambda) mix(static_cast<std::size_t>(p));
        return h;
    }
};

// First-column hook lengths ("beta numbers"): beta_i = mu_i + (m-1-i).
// Removing a border strip of length L corresponds to replacing some beta_i
// by beta_i - L, provided the new value is nonnegative and not already a
// beta number; the strip height is the number of beta_j strictly between.
std::int64_t mn_recurse(const std::vector<int>& mu, const std::vector<int>& lambda, std::size_t li);

std::int64_t mn_memoized(const std::vector<int>& mu, const std::vector<int>& lambda, std::size_t li) {
    static std::unordered_map<MemoKey, std::int64_t, MemoKeyHash> memo;
    static std::mutex memo_mutex;

    MemoKey key{mu, std::vector<int>(lambda.begin() + static_cast<std::ptrdiff_t>(li), lambda.end())};
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::int64_t result = mn_recurse(mu, lambda, li);
    {
        std::lock_guard lock(memo_mutex);
        memo.emplace(std::move(key), result);  // idempotent under races
    }
    return result;
}

std::int64_t mn_recurse(const std::vector<int>& mu, const std::vector<int>& lambda, std::size_t li) {
    if (mu.empty()) return 1;  // lambda exhausted at the same time

    const int strip = lambda[li];  // largest remaining part first
    const std::size_t m = mu.size();
    std::vector<int> beta(m);
    for (std::size_t i = 0; i < m; ++i) beta[i] = mu[i] + static_cast<int>(m - 1 - i);

    std::int64_t total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const int target = beta[i] - strip;
        if (target < 0) break;  // beta is strictly decreasing
        bool occupied = false;
        int height = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> reduced;
        reduced.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            int part = nb[j] - static_cast<int>(m - 1 - j);
            if (part > 0) reduced.push_back(part);
        }
        const std::int64_t child = mn_memoized(reduced, lambda, li + 1);
        total += (height % 2 == 0) ? child : -child;
    }
    return total;
}

std::vector<int> conjugate(const std::vector<int>& parts) {
    if (parts.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return conj;
}

}  // namespace

std::int64_t mn_character(const Partition& mu, const Partition& lambda) {
    if (mu.d() != lambda.d()) throw std::domain_error("mn_character: mu and lambda must partition the same d");
    return mn_memoized(mu.parts(), lambda.parts(), 0);
}

Integer irrep_dimension(const Partition& mu) {
    const auto& parts = mu.parts();
    const auto conj = conjugate(parts);
    Integer hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            const int arm = parts[i] - j - 1;
            const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(static_cast<unsigned>(mu.d())) / hooks;
}

std::size_t CharacterTable::irrep_index(const Partition& mu) const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i] == mu) return i;
    throw std::domain_error("CharacterTable: unknown irrep " + mu.to_string());
}

std::size_t CharacterTable::class_index(const Partition& lambda) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == lambda) return i;
    throw std::domain_error("CharacterTable: unknown class " + lambda.to_string());
}

std::int64_t CharacterTable::value(const Partition& mu, const Partition& lambda) const {
    return values[irrep_index(mu)][class_index(lambda)];
}

CharacterTable character_table(int d) {
    if (d < 1 || d > 14) throw std::domain_error("character_table: d must be in [1,14]");

    CharacterTable t;
    t.d = d;
    t.irreps = enumerate_partitions(d);
    t.classes = t.irreps;
    t.values.assign(t.irreps.size(), std::vector<std::int64_t>(t.classes.size(), 0));

    auto fill_rows = [&t](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r)
            for (std::size_t c = 0; c < t.classes.size(); ++c)
                t.values[r][c] = mn_character(t.irreps[r], t.classes[c]);
    };

    const std::size_t rows = t.irreps.size();
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (d >= 10 && workers > 1) {
        std::vector<std::thread> pool;
        const std::size_t chunk = (rows + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t b = std::min(rows, w * chunk);
            const std::size_t e = std::min(rows, b + chunk);
            if (b < e) pool.emplace_back(fill_rows, b, e);
        }
        for (auto& th : pool) th.join();
    } else {
        fill_rows(0, rows);
    }

    ValidationReport report = validate_table(t);
    if (!report.all_pass()) {
        std::string why;
        for (const auto& c : report.checks)
            if (!c.pass) why += " [" + c.name + ": " + c.detail + "]";
        throw std::logic_error("character_table: internal consistency failure" + why);
    }
    return t;
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.pass; });
}

ValidationReport validate_table(const CharacterTable& t) {
    ValidationReport report;
    const std::size_t n = t.irreps.size();
    const Integer dfact = factorial(static_cast<unsigned>(t.d));

    {
        ValidationCheck c{"square", true, ""};
        const std::size_t p = enumerate_partitions(t.d).size();
        if (t.classes.size() != n || n != p || t.values.size() != n) {
            c.pass = false;
            c.detail = "table is not p(d) x p(d)";
        }
        for (const auto& row : t.values)
            if (row.size() != t.classes.size()) {
                c.pass = false;
                c.detail = "ragged row";
            }
        report.checks.push_back(std::move(c));
        if (!report.checks.back().pass) return report;
    }

    std::vector<Integer> class_sizes(n);
    for (std::size_t c = 0; c < n; ++c) class_sizes[c] = class_info(t.classes[c]).size;

    {
        ValidationCheck c{"row_orthogonality", true, ""};
        for (std::size_t a = 0; a < n && c.pass; ++a)
            for (std::size_t b = a; b < n && c.pass; ++b) {
                Integer sum = 0;
                for (std::size_t k = 0; k < n; ++k)
                    sum += class_sizes[k] * Integer(t.values[a][k]) * Integer(t.values[b][k]);
                const Integer expected = (a == b) ? dfact : Integer(0);
                if (sum != expected) {
                    c.pass = false;
                    c.detail = "rows " + t.irreps[a].to_string() + ", " + t.irreps[b].to_string();
                }
            }
        report.checks.push_back(std::move(c));
    }

    {
        // sum_mu chi(lambda) chi(lambda') = delta * d!/|C_lambda|
        ValidationCheck c{"column_orthogonality", true, ""};
        for (std::size_t a = 0; a < n && c.pass; ++a)
            for (std::size_t b = a; b < n && c.pass; ++b) {
                Integer sum = 0;
                for (std::size_t m = 0; m < n; ++m)
                    sum += Integer(t.values[m][a]) * Integer(t.values[m][b]);
                const Integer expected = (a == b) ? Integer(dfact / class_sizes[a]) : Integer(0);
                if (sum != expected) {
                    c.pass = false;
                    c.detail = "columns " + t.classes[a].to_string() + ", " + t.classes[b].to_string();
                }
            }
        report.checks.push_back(std::move(c));
    }

    const std::size_t id_col = t.class_index(Partition::identity_class(t.d));

    {
        ValidationCheck c{"hook_length_dimensions", true, ""};
        for (std::size_t m = 0; m < n; ++m) {
            if (Integer(t.values[m][id_col]) != irrep_dimension(t.irreps[m])) {
                c.pass = false;
                c.detail = "irrep " + t.irreps[m].to_string();
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        ValidationCheck c{"sum_of_squared_dimensions", true, ""};
        Integer sum = 0;
        for (std::size_t m = 0; m < n; ++m) sum += Integer(t.values[m][id_col]) * Integer(t.values[m][id_col]);
        if (sum != dfact) {
            c.pass = false;
            c.detail = "got " + sum.get_str() + ", want " + dfact.get_str();
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

std::string to_csv(const CharacterTable& t) {
    auto cell = [](const Partition& p) {
        std::string s;
        for (std::size_t i = 0; i < p.parts().size(); ++i) {
            if (i) s += "+";
            s += std::to_string(p.parts()[i]);
        }
        return s;
    };
    std::ostringstream out;
    out << "irrep\\class";
    for (const auto& c : t.classes) out << "," << cell(c);
    out << "\n";
    for (std::size_t r = 0; r < t.irreps.size(); ++r) {
        out << cell(t.irreps[r]);
        for (std::size_t c = 0; c < t.classes.size(); ++c) out << "," << t.values[r][c];
        out << "\n";
    }
    return out.str();
}

}  // namespace planecert
