#include "bsroots/parse.hpp"

#include <algorithm>
#include <cctype>

namespace bsroots {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 20;

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& vars, const ChainRing& ring)
        : src_(src), vars_(vars), ring_(ring) {}

    Poly parse() {
        Poly out = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        bool negate = false;
        for (;;) {
            if (accept('-'))
                negate = !negate;
            else if (!accept('+'))
                break;
        }
        Poly b = base();
        if (accept('^')) b = b.pow(exponent());
        return negate ? -b : b;
    }

    std::uint64_t exponent() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected a nonnegative integer exponent");
        std::uint64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(src_[pos_++] - '0');
            if (v > kMaxExponent) fail("exponent too large");
        }
        return v;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        const std::size_t n = vars_.size();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            const std::uint64_t mod = ring_.modulus();
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * 10 + (src_[pos_++] - '0')) % mod);
            return Poly::term(ring_, n, Monomial{}, ring_.from_unsigned(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            const std::string name = src_.substr(start, pos_ - start);
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(ring_, n, static_cast<std::size_t>(it - vars_.begin()));
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& src_;
    const std::vector<std::string>& vars_;
    ChainRing ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& src, const std::vector<std::string>& variables, const ChainRing& ring) {
    return Parser(src, variables, ring).parse();
}

}  // namespace bsroots
