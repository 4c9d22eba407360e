#include "diptych/gens.hpp"

#include <sstream>

namespace diptych {

std::string GenId::name() const {
    switch (kind) {
        case Kind::A: return "A";
        case Kind::B: return "B";
        case Kind::L: return "L";
        case Kind::M: return "M";
        case Kind::X: return "x_" + std::to_string(index);
        case Kind::Y: return "y_" + std::to_string(index);
    }
    return "?";
}

GenId GenId::parse(const std::string& name) {
    if (name == "A") return A();
    if (name == "B") return B();
    if (name == "L") return L();
    if (name == "M") return M();
    if (name.size() >= 3 && name[1] == '_' && (name[0] == 'x' || name[0] == 'y')) {
        int idx = std::stoi(name.substr(2));
        return name[0] == 'x' ? x(idx) : y(idx);
    }
    throw DomainError("bad generator name: " + name);
}

Monomial Monomial::gen(GenId g, Int exp) {
    Monomial m;
    m.set_exponent(g, std::move(exp));
    return m;
}

static const Int kZero = 0;

const Int& Monomial::exponent(const GenId& g) const {
    auto it = exp_.find(g);
    return it == exp_.end() ? kZero : it->second;
}

void Monomial::set_exponent(const GenId& g, Int exp) {
    if (exp == 0)
        exp_.erase(g);
    else
        exp_[g] = std::move(exp);
}

bool Monomial::nonnegative() const {
    for (const auto& [g, e] : exp_)
        if (e < 0) return false;
    return true;
}

Int Monomial::degree_in(GenId::Kind k1, GenId::Kind k2) const {
    Int d = 0;
    for (const auto& [g, e] : exp_)
        if (g.kind == k1 || g.kind == k2) d += e;
    return d;
}

Monomial& Monomial::operator*=(const Monomial& other) {
    for (const auto& [g, e] : other.exp_) {
        exp_[g] += e;
        trim(g);
    }
    return *this;
}

Monomial Monomial::inverse() const {
    Monomial m;
    for (const auto& [g, e] : exp_) m.exp_[g] = -e;
    return m;
}

Monomial Monomial::divide_exact(const Monomial& other) const {
    Monomial q = *this * other.inverse();
    if (!q.nonnegative())
        throw InvariantError("monomial division is not exact: " + str() + " / " + other.str());
    return q;
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& [g, e] : exp_)
        if (e > other.exponent(g)) return false;
    return true;
}

Monomial Monomial::hcf(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (const auto& [g, e] : a.exp_) {
        const Int& f = b.exponent(g);
        Int low = e < f ? e : f;
        if (low != 0) m.exp_[g] = low;
    }
    return m;
}

void Monomial::trim(const GenId& g) {
    auto it = exp_.find(g);
    if (it != exp_.end() && it->second == 0) exp_.erase(it);
}

std::string Monomial::str() const {
    if (exp_.empty()) return "1";
    std::ostringstream os;
    for (const auto& [g, e] : exp_) {
        os << g.name();
        if (e != 1) os << '^' << e.get_str();
    }
    return os.str();
}

}  // namespace diptych
