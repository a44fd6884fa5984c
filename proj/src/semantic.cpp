#include "umbral/semantic.hpp"

#include "umbral/errors.hpp"
#include "umbral/series.hpp"

#include <cctype>
#include <sstream>

namespace umbral {

umbra::umbra(std::string name, std::vector<rat> moments)
    : name_(std::move(name)), moments_(std::move(moments)) {
    if (name_.empty())
        throw invariant_violation("umbra needs a name");
    if (moments_.empty() || !moments_[0].is_one())
        throw invariant_violation("umbra moments must start with eval(1) = 1");
}

umbra umbra::augmentation(std::string name, std::size_t count) {
    std::vector<rat> m(count, rat(0));
    if (count == 0)
        m.resize(1);
    m[0] = rat(1);
    return umbra(std::move(name), std::move(m));
}

const rat& umbra::moment(std::size_t k) const {
    if (k >= moments_.size())
        throw insufficient_moments("umbra '" + name_ + "' has no moment of order " +
                                   std::to_string(k));
    return moments_[k];
}

umbral_poly umbral_poly::constant(const rat& c) {
    umbral_poly p;
    p.add_term({}, c);
    return p;
}

umbral_poly umbral_poly::variable(const std::string& name, unsigned exponent) {
    umbral_poly p;
    if (exponent == 0)
        p.add_term({}, rat(1));
    else
        p.add_term({{name, exponent}}, rat(1));
    return p;
}

void umbral_poly::add_term(const umbral_monomial& m, const rat& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

umbral_poly& umbral_poly::operator+=(const umbral_poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

umbral_poly& umbral_poly::operator-=(const umbral_poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

umbral_poly& umbral_poly::operator*=(const umbral_poly& o) {
    std::map<umbral_monomial, rat> out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            umbral_monomial m = m1;
            for (const auto& [name, e] : m2)
                m[name] += e;
            rat c = c1 * c2;
            auto [it, inserted] = out.try_emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    terms_ = std::move(out);
    return *this;
}

std::string umbral_poly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0)
            os << "-";
        rat mag = c.sign() < 0 ? -c : c;
        bool wrote_coeff = false;
        if (m.empty() || !mag.is_one()) {
            os << mag.str();
            wrote_coeff = true;
        }
        for (const auto& [name, e] : m) {
            if (wrote_coeff)
                os << "*";
            os << name;
            if (e > 1)
                os << "^" << e;
            wrote_coeff = true;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Recursive-descent parser for the CLI expression grammar.
class expr_parser {
public:
    explicit expr_parser(std::string_view text) : text_(text) {}

    umbral_poly parse() {
        umbral_poly p = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("trailing input in expression at offset " + std::to_string(pos_));
        return p;
    }

private:
    umbral_poly sum() {
        skip_ws();
        umbral_poly acc = product(); // a leading '-' is consumed by factor()
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += product();
            } else if (c == '-') {
                ++pos_;
                acc -= product();
            } else {
                return acc;
            }
        }
    }

    umbral_poly product() {
        umbral_poly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    umbral_poly factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            umbral_poly p = sum();
            skip_ws();
            if (peek() != ')')
                throw parse_error("missing ')' in expression");
            ++pos_;
            return p;
        }
        if (c == '-') {
            ++pos_;
            return umbral_poly::constant(rat(-1)) * factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return umbral_poly::constant(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            unsigned e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = exponent();
            }
            return umbral_poly::variable(name, e);
        }
        throw parse_error(std::string("unexpected character '") + c + "' in expression");
    }

    rat number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        skip_ws();
        if (peek() == '/') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::size_t dstart = pos_;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                digits += "/" + std::string(text_.substr(dstart, pos_ - dstart));
            } else {
                pos_ = save;
            }
        }
        return rat::from_string(digits);
    }

    unsigned exponent() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("exponent must be a non-negative integer");
        unsigned e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
        return e;
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

umbral_poly umbral_poly::parse(std::string_view text) { return expr_parser(text).parse(); }

void umbra_env::add(umbra u) {
    std::string name = u.name();
    umbrae_.insert_or_assign(std::move(name), std::move(u));
}

bool umbra_env::has(const std::string& name) const { return umbrae_.contains(name); }

const umbra& umbra_env::get(const std::string& name) const {
    auto it = umbrae_.find(name);
    if (it == umbrae_.end())
        throw unknown_umbra("no umbra named '" + name + "' in the environment");
    return it->second;
}

rat eval(const umbral_poly& p, const umbra_env& env) {
    rat acc;
    for (const auto& [m, c] : p.terms()) {
        rat term = c;
        for (const auto& [name, e] : m)
            term *= env.get(name).moment(e);
        acc += term;
    }
    return acc;
}

bool umbrally_equivalent(const umbral_poly& f, const umbral_poly& g, const umbra_env& env) {
    return eval(f, env) == eval(g, env);
}

bool exchangeable(const umbra& a, const umbra& b, std::size_t bound) {
    if (a.moments().size() < bound + 1 || b.moments().size() < bound + 1)
        throw insufficient_moments("exchangeability up to " + std::to_string(bound) +
                                   " needs that many moments on both umbrae");
    for (std::size_t k = 0; k <= bound; ++k)
        if (a.moments()[k] != b.moments()[k])
            return false;
    return true;
}

std::vector<rat> dot_power_moments(const umbra& a, std::size_t n, std::size_t bound) {
    if (a.moments().size() < bound + 1)
        throw insufficient_moments("dot power up to " + std::to_string(bound) +
                                   " needs that many moments");
    std::vector<rat> acc(bound + 1, rat(0));
    acc[0] = rat(1); // moments of the empty sum
    std::vector<rat> m(a.moments().begin(), a.moments().begin() + bound + 1);
    for (std::size_t i = 0; i < n; ++i)
        acc = binomial_convolve(acc, m);
    return acc;
}

} // namespace umbral
