#include <planecert/delsarte_system.hpp>

#include <sstream>
#include <stdexcept>

namespace planecert {

std::vector<Partition> supported_classes(int d) {
    if (d < 2) throw std::domain_error("supported_classes: d must be >= 2");
    std::vector<Partition> out;
    out.push_back(Partition::identity_class(d));
    for (const auto& p : enumerate_partitions(d))
        if (p.ones() == 0) out.push_back(p);
    for (const auto& p : enumerate_partitions(d))
        if (p.ones() == 1) out.push_back(p);
    return out;
}

std::size_t DelsarteSystem::variable_index(const Partition& cls) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == cls) return i;
    throw std::domain_error("DelsarteSystem: class " + cls.to_string() + " is not a variable");
}

DelsarteSystem build_system(int d, bool even_constraints) {
    DelsarteSystem s;
    s.d = d;
    s.theta_identity = Rational(d - 1) * d;
    s.even_constraints = even_constraints;
    s.table = character_table(d);

    const auto supported = supported_classes(d);
    for (std::size_t i = 1; i < supported.size(); ++i) {  // skip identity
        s.variables.push_back(supported[i]);
        if (supported[i].ones() == 0) ++s.num_c0;
    }
    const std::size_t n = s.variables.size();

    EqualityRow e2{"E2", std::vector<Rational>(n, 0), Rational(d - 1) * (d - 1) * d};
    for (std::size_t i = 0; i < s.num_c0; ++i) e2.coeffs[i] = 1;
    s.equalities.push_back(std::move(e2));

    EqualityRow e3{"E3", std::vector<Rational>(n, 0), Rational(d - 2) * (d - 1) * d * d};
    for (std::size_t i = s.num_c0; i < n; ++i) e3.coeffs[i] = 1;
    s.equalities.push_back(std::move(e3));

    for (std::size_t i = 0; i < n; ++i) {
        InequalityRow row{"nonneg " + s.variables[i].to_string(), InequalityKind::variable_nonneg,
                          std::vector<Rational>(n, 0), 0};
        row.coeffs[i] = 1;
        s.inequalities.push_back(std::move(row));
    }

    for (const auto& mu : s.table.irreps) {
        InequalityRow row{"chi " + mu.to_string(), InequalityKind::character,
                          std::vector<Rational>(n, 0), 0};
        for (std::size_t i = 0; i < n; ++i) row.coeffs[i] = s.table.value(mu, s.variables[i]);
        const Rational identity_term =
            Rational(s.table.value(mu, Partition::identity_class(d))) * s.theta_identity;
        row.rhs = -identity_term;
        s.inequalities.push_back(std::move(row));
    }

    return s;
}

std::vector<Violation> evaluate_theta(const ThetaVector& theta, const DelsarteSystem& s) {
    if (theta.d() != s.d) throw std::domain_error("evaluate_theta: theta and system disagree on d");
    std::vector<Violation> out;

    const Partition identity = Partition::identity_class(s.d);
    auto is_supported = [&](const Partition& cls) {
        if (cls == identity) return true;
        for (const auto& v : s.variables)
            if (v == cls) return true;
        return false;
    };

    for (const auto& [cls, value] : theta.entries()) {
        if (!is_supported(cls))
            out.push_back({Violation::Kind::support, "support " + cls.to_string(), value});
        if (value < 0 && cls != identity)
            out.push_back({Violation::Kind::inequality, "nonneg " + cls.to_string(), value});
    }

    {
        const Rational residual = theta.identity_entry() - s.theta_identity;
        if (residual != 0) out.push_back({Violation::Kind::equality, "E1", residual});
    }
    for (const auto& eq : s.equalities) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < s.variables.size(); ++i) lhs += eq.coeffs[i] * theta.at(s.variables[i]);
        if (lhs != eq.rhs) out.push_back({Violation::Kind::equality, eq.label, lhs - eq.rhs});
    }

    // Character rows as full class sums over theta's actual entries.
    for (const auto& mu : s.table.irreps) {
        Rational sum = 0;
        for (const auto& [cls, value] : theta.entries()) sum += Rational(s.table.value(mu, cls)) * value;
        if (sum < 0)
            out.push_back({Violation::Kind::inequality, "chi " + mu.to_string(), sum});
    }

    if (s.even_constraints) {
        for (const auto& [cls, value] : theta.entries()) {
            if (cls == identity) continue;
            if (!is_even_integer(value))
                out.push_back({Violation::Kind::evenness, "even " + cls.to_string(), value});
        }
    }

    return out;
}

std::string to_lp_text(const DelsarteSystem& s) {
    auto var_name = [&](std::size_t i) {
        std::string n = "t";
        for (int p : s.variables[i].parts()) n += "_" + std::to_string(p);
        return n;
    };
    auto render = [&](const std::vector<Rational>& coeffs) {
        std::string line;
        bool first = true;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            const Rational& c = coeffs[i];
            if (first) {
                if (c == 1)
                    line += var_name(i);
                else if (c == -1)
                    line += "- " + var_name(i);
                else
                    line += to_string(c) + " " + var_name(i);
                first = false;
            } else {
                const Rational a = abs(c);
                line += (c < 0 ? " - " : " + ");
                if (a != 1) line += to_string(a) + " ";
                line += var_name(i);
            }
        }
        if (first) line = "0";
        return line;
    };

    std::ostringstream out;
    out << "\\ delsarte system, order d = " << s.d << "\n";
    out << "\\ theta(identity) fixed at " << to_string(s.theta_identity) << "\n";
    out << "\\ variables: ";
    for (std::size_t i = 0; i < s.variables.size(); ++i)
        out << (i ? ", " : "") << var_name(i) << " = theta" << s.variables[i].to_string();
    out << "\n";
    if (s.even_constraints)
        out << "\\ side condition: every variable must take an even integer value\n";
    out << "Minimize\n obj: 0\nSubject To\n";
    for (const auto& eq : s.equalities)
        out << " " << eq.label << ": " << render(eq.coeffs) << " = " << to_string(eq.rhs) << "\n";
    std::size_t k = 0;
    for (const auto& iq : s.inequalities) {
        if (iq.kind == InequalityKind::variable_nonneg) continue;  // in Bounds
        out << " c" << k++ << ": " << render(iq.coeffs) << " >= " << to_string(iq.rhs) << "\n";
    }
    out << "Bounds\n";
    for (std::size_t i = 0; i < s.variables.size(); ++i) out << " " << var_name(i) << " >= 0\n";
    out << "End\n";
    return out.str();
}

}  // namespace planecert
