#include <planecert/refutation.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace planecert {

namespace {

int class_sign(const Partition& cls) {
    return (cls.d() - static_cast<int>(cls.num_parts())) % 2 == 0 ? 1 : -1;
}

// Support inside {e} u C0 u C1 plus the three equalities; the refuters
// presume a putative plane's difference counts.
void check_plane_equalities(const ThetaVector& theta, int d) {
    if (theta.d() != d) throw std::domain_error("parity_refute: theta has wrong degree");
    Rational sum0 = 0, sum1 = 0;
    const Partition identity = Partition::identity_class(d);
    for (const auto& [cls, value] : theta.entries()) {
        if (cls == identity) continue;
        if (cls.ones() == 0)
            sum0 += value;
        else if (cls.ones() == 1)
            sum1 += value;
        else
            throw std::domain_error("parity_refute: theta supported outside {e} u C0 u C1");
    }
    if (theta.identity_entry() != Rational(d - 1) * d ||
        sum0 != Rational(d - 1) * (d - 1) * d || sum1 != Rational(d - 2) * (d - 1) * d * d)
        throw std::domain_error("parity_refute: theta violates the plane equalities");
}

std::string join_splits(const std::vector<long>& ks) {
    std::string s = "{";
    for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
    return s + "}";
}

}  // namespace

Rational odd_difference_count(const ThetaVector& theta) {
    Rational sum = 0;
    for (const auto& [cls, value] : theta.entries())
        if (class_sign(cls) == -1) sum += value;
    return sum;
}

std::vector<long> sign_split_solutions(long n, const Rational& n_odd) {
    std::vector<long> out;
    if (!is_integral(n_odd)) return out;
    for (long k = 0; k <= n; ++k)
        if (Rational(2) * k * (n - k) == n_odd) out.push_back(k);
    return out;
}

RefutationReport parity_refute(const ThetaVector& theta, int d, bool apply_divisibility_step) {
    check_plane_equalities(theta, d);

    RefutationReport report;
    report.d = d;
    report.theta_examined = theta;

    const long n = static_cast<long>(d - 1) * d;
    const Rational n_odd = odd_difference_count(theta);
    const std::vector<long> splits = sign_split_solutions(n, n_odd);
    report.reason.n_odd = n_odd;
    report.reason.split_set = splits;

    if (splits.empty()) {
        report.outcome = RefutationReport::Outcome::refuted;
        report.reason.kind = RefutationReason::Kind::parity_split;
        report.reason.detail = "no split of " + std::to_string(n) + " elements yields " +
                               to_string(n_odd) + " odd differences";
        return report;
    }

    // When every fixed-point-free class in the support is even, differences
    // inside one parallel class never change sign, so each sign class is a
    // union of whole parallel classes of size d.
    bool class_signs_constant = true;
    for (const auto& [cls, value] : theta.entries())
        if (cls.ones() == 0 && value != 0 && class_sign(cls) == -1) class_signs_constant = false;

    if (apply_divisibility_step && class_signs_constant) {
        std::vector<long> surviving;
        for (long k : splits)
            if (k % d == 0 && (n - k) % d == 0) surviving.push_back(k);
        if (surviving.empty()) {
            report.outcome = RefutationReport::Outcome::refuted;
            report.reason.kind = RefutationReason::Kind::parity_divisibility;
            report.reason.detail = "splits " + join_splits(splits) +
                                   " all fail divisibility by d=" + std::to_string(d);
            return report;
        }
        report.reason.detail = "splits " + join_splits(surviving) + " survive divisibility";
    }

    report.outcome = RefutationReport::Outcome::inconclusive;
    report.reason.kind = RefutationReason::Kind::none;
    return report;
}

RefutationReport integrality_evenness_refute(const ThetaVector& theta) {
    RefutationReport report;
    report.d = theta.d();
    report.theta_examined = theta;
    report.outcome = RefutationReport::Outcome::inconclusive;

    const Partition identity = Partition::identity_class(theta.d());
    for (const auto& [cls, value] : theta.entries()) {
        if (cls == identity) continue;
        if (!is_integral(value)) {
            report.outcome = RefutationReport::Outcome::refuted;
            report.reason.kind = RefutationReason::Kind::non_integral_entry;
            report.reason.offending_class = cls;
            report.reason.offending_value = value;
            report.reason.detail = "theta" + cls.to_string() + " = " + to_string(value) + " is not an integer";
            return report;
        }
        if (!is_even_integer(value)) {
            report.outcome = RefutationReport::Outcome::refuted;
            report.reason.kind = RefutationReason::Kind::odd_entry;
            report.reason.offending_class = cls;
            report.reason.offending_value = value;
            report.reason.detail = "theta" + cls.to_string() + " = " + to_string(value) + " is odd";
            return report;
        }
    }
    return report;
}

RefutationReport certify(int d) {
    if (d < 2 || d > 14) throw std::domain_error("certify: d must be in [2,14]");
    return certify(build_system(d));
}

RefutationReport certify(const DelsarteSystem& s) {
    RefutationReport report;
    report.d = s.d;

    FeasibilityReport feas = full_report(s);
    if (feas.status == FeasibilityReport::Status::infeasible) {
        report.outcome = RefutationReport::Outcome::refuted;
        report.reason.kind = RefutationReason::Kind::lp_infeasible;
        report.reason.detail = "the linear system has no solution";
        report.feasibility = std::move(feas);
        return report;
    }

    report.theta_examined = feas.witness;
    const bool unique = feas.unique.value_or(false);
    report.feasibility = std::move(feas);

    if (!unique) {
        report.outcome = RefutationReport::Outcome::inconclusive;
        report.reason.kind = RefutationReason::Kind::none;
        report.reason.detail = "solution is not unique; refuters run only on a unique point";
        return report;
    }

    const ThetaVector& theta = *report.theta_examined;
    RefutationReport even = integrality_evenness_refute(theta);
    if (even.outcome == RefutationReport::Outcome::refuted) {
        report.outcome = even.outcome;
        report.reason = std::move(even.reason);
        return report;
    }
    RefutationReport parity = parity_refute(theta, s.d);
    report.outcome = parity.outcome;
    report.reason = std::move(parity.reason);
    return report;
}

std::string render_transcript(const RefutationReport& report, const DelsarteSystem& s) {
    std::ostringstream out;
    const int d = s.d;
    const Partition identity = Partition::identity_class(d);

    out << "== certificate: projective plane of order " << d << " ==\n\n";

    out << "supported conjugacy classes of S_" << d << ":\n";
    out << "  identity " << identity.to_string() << ", theta fixed at " << to_string(s.theta_identity) << "\n";
    out << "  C0 (no fixed point):";
    for (std::size_t i = 0; i < s.num_c0; ++i) out << " " << s.variables[i].to_string();
    out << "\n  C1 (one fixed point):";
    for (std::size_t i = s.num_c0; i < s.variables.size(); ++i) out << " " << s.variables[i].to_string();
    out << "\n\nequalities:\n";
    out << "  theta(e) = " << to_string(s.theta_identity) << "\n";
    for (const auto& eq : s.equalities) {
        out << "  " << eq.label << ": sum over " << (eq.label == "E2" ? "C0" : "C1")
            << " = " << to_string(eq.rhs) << "\n";
    }

    // Restricted character table, classes as columns, theta parameters last.
    out << "\ncharacter table on the supported classes:\n";
    std::vector<std::string> header{"irrep \\ class", identity.to_string()};
    for (const auto& v : s.variables) header.push_back(v.to_string());
    std::vector<std::vector<std::string>> grid;
    grid.push_back(header);
    for (const auto& mu : s.table.irreps) {
        std::vector<std::string> row{mu.to_string(), std::to_string(s.table.value(mu, identity))};
        for (const auto& v : s.variables) row.push_back(std::to_string(s.table.value(mu, v)));
        grid.push_back(std::move(row));
    }
    {
        std::vector<std::string> row{"theta", to_string(s.theta_identity)};
        for (std::size_t i = 0; i < s.variables.size(); ++i) {
            if (report.theta_examined)
                row.push_back(to_string(report.theta_examined->at(s.variables[i])));
            else
                row.push_back("t" + std::to_string(i + 1));
        }
        grid.push_back(std::move(row));
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : grid) {
        out << " ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << " " << std::string(width[c] - row[c].size(), ' ') << row[c];
            if (c == 0) out << " |";
        }
        out << "\n";
    }

    const auto& feas = report.feasibility;
    out << "\nstep 1, exact feasibility: ";
    if (!feas || feas->status == FeasibilityReport::Status::infeasible) {
        out << "infeasible\n";
        out << "\nverdict: refuted\n";
        return out.str();
    }
    out << "feasible\n  witness:";
    for (const auto& v : s.variables) out << " theta" << v.to_string() << "=" << to_string(report.theta_examined->at(v));
    out << "\n";

    out << "\nstep 2, per-variable bounds over the polytope:\n";
    for (std::size_t i = 0; i < s.variables.size(); ++i) {
        out << "  theta" << s.variables[i].to_string() << " in [" << to_string(feas->bounds[i].min)
            << ", " << to_string(feas->bounds[i].max) << "]\n";
    }
    if (!feas->unique.value_or(false)) {
        out << "  open intervals remain -> solution is not unique\n";
        out << "\nverdict: inconclusive (system feasible, solution not unique)\n";
        return out.str();
    }
    out << "  all intervals degenerate -> unique solution\n";

    out << "\nstep 3, integrality and evenness of the unique point: ";
    if (report.reason.kind == RefutationReason::Kind::non_integral_entry ||
        report.reason.kind == RefutationReason::Kind::odd_entry) {
        out << report.reason.detail << "\n\nverdict: refuted\n";
        return out.str();
    }
    out << "all non-identity entries are even integers -> inconclusive\n";

    const long n = static_cast<long>(d - 1) * d;
    out << "\nstep 4, parity argument over n = " << n << " permutations:\n";
    out << "  odd-parity difference total N_odd = " << to_string(report.reason.n_odd) << "\n";
    out << "  splits k with 2k(n-k) = N_odd: " << join_splits(report.reason.split_set) << "\n";
    if (report.reason.kind == RefutationReason::Kind::parity_split) {
        out << "  no split realizes N_odd\n\nverdict: refuted\n";
        return out.str();
    }
    bool signs_constant = true;
    for (const auto& [cls, value] : report.theta_examined->entries())
        if (cls.ones() == 0 && value != 0 && class_sign(cls) == -1) signs_constant = false;
    if (signs_constant) {
        out << "  every fixed-point-free support class is even, so each parallel class is\n"
               "  sign-pure and a valid split needs k = 0 and n-k = 0 (mod " << d << ")\n";
        if (report.reason.kind == RefutationReason::Kind::parity_divisibility) {
            for (long k : report.reason.split_set)
                out << "  k = " << k << ": " << k << " mod " << d << " = " << k % d
                    << (k % d == 0 ? "" : " -> divisibility failure mod " + std::to_string(d)) << "\n";
            out << "  no split survives\n\nverdict: refuted\n";
            return out.str();
        }
        out << "  " << report.reason.detail << "\n";
    } else {
        out << "  some fixed-point-free support class is odd; the divisibility step does not apply\n";
    }

    out << "\nverdict: inconclusive\n";
    return out.str();
}

}  // namespace planecert
