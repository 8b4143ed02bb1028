#include "bmturan/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace bmturan {

namespace {

int variable_rank(const std::string& name) {
    static const std::vector<std::string> fixed{"m", "l", "n", "t", "s", "W", "x"};
    const auto it = std::find(fixed.begin(), fixed.end(), name);
    return it == fixed.end() ? static_cast<int>(fixed.size()) : static_cast<int>(it - fixed.begin());
}

bool variable_less(const std::string& a, const std::string& b) {
    const int ra = variable_rank(a);
    const int rb = variable_rank(b);
    return ra != rb ? ra < rb : a < b;
}

unsigned degree_of(const Monomial& mono) {
    return std::accumulate(mono.begin(), mono.end(), 0u);
}

// Graded lex, higher degree first; ties broken by exponents in variable order.
bool display_before(const Monomial& a, const Monomial& b) {
    const unsigned da = degree_of(a);
    const unsigned db = degree_of(b);
    if (da != db) {
        return da > db;
    }
    return a > b;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    MultiPoly parse_all() {
        MultiPoly result = expression();
        skip_space();
        if (pos_ != text_.size()) {
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return result;
    }

private:
    MultiPoly expression() {
        MultiPoly result = term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                result += term();
            } else if (accept('-')) {
                result -= term();
            } else {
                return result;
            }
        }
    }

    MultiPoly term() {
        MultiPoly result = unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                result *= unary();
            } else if (pos_ < text_.size() && starts_factor(text_[pos_])) {
                result *= power();
            } else {
                return result;
            }
        }
    }

    MultiPoly unary() {
        skip_space();
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        skip_space();
        if (accept('^')) {
            skip_space();
            const std::string digits = read_digits();
            if (digits.empty()) {
                error("expected an integer exponent");
            }
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MultiPoly atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            error("unexpected end of input");
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            return MultiPoly(Rational(BigInt(read_digits(), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            ++pos_;
            return MultiPoly::variable(std::string(1, c));
        }
        if (accept('(')) {
            MultiPoly inner = expression();
            skip_space();
            if (!accept(')')) {
                error("expected ')'");
            }
            return inner;
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    static bool starts_factor(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '(';
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    [[noreturn]] void error(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) +
                                    ": " + what + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> merged;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged),
                   variable_less);
    return merged;
}

MultiPoly::MultiPoly(long constant) : MultiPoly(Rational(constant)) {}

MultiPoly::MultiPoly(const Rational& constant) {
    if (!constant.is_zero()) {
        terms_.emplace(Monomial{}, constant);
    }
}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (name.empty()) {
        throw std::invalid_argument("empty variable name");
    }
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Monomial{1}, Rational(1));
    return p;
}

MultiPoly MultiPoly::parse(std::string_view text) {
    return Parser(text).parse_all();
}

bool MultiPoly::has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

unsigned MultiPoly::degree(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        return 0;
    }
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    unsigned best = 0;
    for (const auto& [mono, coeff] : terms_) {
        best = std::max(best, mono[idx]);
    }
    return best;
}

unsigned MultiPoly::total_degree() const {
    unsigned best = 0;
    for (const auto& [mono, coeff] : terms_) {
        best = std::max(best, degree_of(mono));
    }
    return best;
}

Rational MultiPoly::coefficient(const std::map<std::string, unsigned>& monomial) const {
    Monomial key(vars_.size(), 0);
    for (const auto& [name, exponent] : monomial) {
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
            if (exponent != 0) {
                return 0;
            }
            continue;
        }
        key[static_cast<std::size_t>(it - vars_.begin())] = exponent;
    }
    const auto found = terms_.find(key);
    return found == terms_.end() ? Rational(0) : found->second;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<const Rational*> values;
    values.reserve(vars_.size());
    for (const auto& name : vars_) {
        const auto it = point.find(name);
        if (it == point.end()) {
            throw std::invalid_argument("eval: variable '" + name + "' is unbound");
        }
        values.push_back(&it->second);
    }
    Rational sum(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] != 0) {
                term *= values[i]->pow(mono[i]);
            }
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::subst(const std::string& name, const MultiPoly& expr) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        throw std::invalid_argument("subst: unknown variable '" + name + "'");
    }
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    // Group terms by the exponent of `name`, then sum group_k * expr^k.
    std::map<unsigned, MultiPoly> groups;
    for (const auto& [mono, coeff] : terms_) {
        Monomial rest = mono;
        rest[idx] = 0;
        MultiPoly& group = groups[mono[idx]];
        group.vars_ = vars_;
        group.terms_.emplace(std::move(rest), coeff);
    }
    MultiPoly result;
    MultiPoly power(1);
    unsigned power_exp = 0;
    for (auto& [k, group] : groups) {
        while (power_exp < k) {
            power *= expr;
            ++power_exp;
        }
        result += group * power;
    }
    result = result.over(merge_variables(vars_, expr.vars_));
    if (!expr.has_variable(name)) {
        result.drop_unused(name);
    }
    return result;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

std::optional<std::pair<std::string, Rational>> MultiPoly::first_negative_term() const {
    std::vector<const std::pair<const Monomial, Rational>*> ordered;
    for (const auto& entry : terms_) {
        ordered.push_back(&entry);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](auto* a, auto* b) { return display_before(a->first, b->first); });
    const std::pair<const Monomial, Rational>* worst = nullptr;
    for (auto* entry : ordered) {
        if (entry->second.sign() < 0 && (worst == nullptr || entry->second < worst->second)) {
            worst = entry;
        }
    }
    if (worst == nullptr) {
        return std::nullopt;
    }
    return std::make_pair(monomial_str(vars_, worst->first), worst->second);
}

std::string MultiPoly::monomial_str(const std::vector<std::string>& vars, const Monomial& mono) {
    std::string out;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += vars[i];
        if (mono[i] > 1) {
            out += "^" + std::to_string(mono[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<const std::pair<const Monomial, Rational>*> ordered;
    for (const auto& entry : terms_) {
        ordered.push_back(&entry);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](auto* a, auto* b) { return display_before(a->first, b->first); });
    std::string out;
    for (auto* entry : ordered) {
        const Rational& coeff = entry->second;
        const bool constant = degree_of(entry->first) == 0;
        const Rational magnitude = coeff.abs();
        if (out.empty()) {
            out += coeff.sign() < 0 ? "-" : "";
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
        }
        std::string scalar = magnitude.is_integer() ? magnitude.numerator().get_str()
                                                    : "(" + magnitude.numerator().get_str() + "/" +
                                                          magnitude.denominator().get_str() + ")";
        if (constant) {
            out += scalar;
        } else if (magnitude == Rational(1)) {
            out += monomial_str(vars_, entry->first);
        } else {
            out += scalar + "*" + monomial_str(vars_, entry->first);
        }
    }
    return out;
}

MultiPoly MultiPoly::over(const std::vector<std::string>& vars) const {
    if (vars == vars_) {
        return *this;
    }
    std::vector<std::size_t> position;
    position.reserve(vars_.size());
    for (const auto& name : vars_) {
        const auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) {
            throw std::logic_error("variable list does not contain '" + name + "'");
        }
        position.push_back(static_cast<std::size_t>(it - vars.begin()));
    }
    MultiPoly out;
    out.vars_ = vars;
    for (const auto& [mono, coeff] : terms_) {
        Monomial wide(vars.size(), 0);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            wide[position[i]] = mono[i];
        }
        out.terms_.emplace(std::move(wide), coeff);
    }
    return out;
}

void MultiPoly::drop_unused(const std::string& name) {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        return;
    }
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    for (const auto& [mono, coeff] : terms_) {
        if (mono[idx] != 0) {
            return;
        }
    }
    std::map<Monomial, Rational> narrowed;
    for (auto& [mono, coeff] : terms_) {
        Monomial shorter = mono;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(idx));
        narrowed.emplace(std::move(shorter), coeff);
    }
    terms_ = std::move(narrowed);
    vars_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    const auto vars = merge_variables(vars_, rhs.vars_);
    if (vars != vars_) {
        *this = over(vars);
    }
    const MultiPoly aligned = rhs.over(vars);
    for (const auto& [mono, coeff] : aligned.terms_) {
        auto [it, inserted] = terms_.try_emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    return *this += -rhs;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    const auto vars = merge_variables(lhs.vars_, rhs.vars_);
    const MultiPoly a = lhs.over(vars);
    const MultiPoly b = rhs.over(vars);
    MultiPoly out;
    out.vars_ = vars;
    Monomial product(vars.size(), 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < product.size(); ++i) {
                product[i] = ma[i] + mb[i];
            }
            auto [it, inserted] = out.terms_.try_emplace(product, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(out.terms_, [](const auto& entry) { return entry.second.is_zero(); });
    return out;
}

MultiPoly operator-(const MultiPoly& value) {
    MultiPoly out = value;
    for (auto& [mono, coeff] : out.terms_) {
        coeff = -coeff;
    }
    return out;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return (lhs - rhs).is_zero();
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    }
    throw std::invalid_argument("unknown polynomial op");
}

}  // namespace bmturan
