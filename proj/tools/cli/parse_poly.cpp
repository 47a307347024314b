#include "cli/parse_poly.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <string>

#include "knotsurg/error.hpp"

namespace knotsurg::cli {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

class Reader {
public:
    explicit Reader(std::string_view s) : s_(s) {}

    // Position of the next non-space character (or end).
    std::size_t pos()
    {
        skip();
        return i_;
    }
    bool done() { return pos() == s_.size(); }
    char peek() { return done() ? '\0' : s_[i_]; }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++i_;
        return true;
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    // Digits may be separated by whitespace only if we allowed it; we do not.
    std::string digits()
    {
        skip();
        std::string out;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            out += s_[i_++];
        return out;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(pos(), what); }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

std::int64_t read_exponent(Reader& r)
{
    const bool paren = r.accept('(');
    bool negative = false;
    if (r.accept('-'))
        negative = true;
    else
        r.accept('+');
    const std::size_t at = r.pos();
    if (!r.at_digit())
        r.fail("expected exponent digits");
    std::string ds = r.digits();
    if (ds.size() > 7 || std::stoll(ds) > kMaxExponent)
        throw ParseError(at, "exponent magnitude exceeds " + std::to_string(kMaxExponent));
    if (paren && !r.accept(')'))
        r.fail("expected ')'");
    const std::int64_t e = std::stoll(ds);
    return negative ? -e : e;
}

} // namespace

LaurentPoly parse_poly(std::string_view s)
{
    Reader r(s);
    if (r.done())
        r.fail("empty polynomial");

    std::map<std::int64_t, Integer> terms;
    bool first = true;
    while (!r.done()) {
        int sign = 1;
        if (r.accept('-'))
            sign = -1;
        else if (!r.accept('+') && !first)
            r.fail("expected '+' or '-'");
        first = false;

        Integer coeff = 1;
        bool have_coeff = false;
        if (r.at_digit()) {
            coeff = Integer(r.digits());
            have_coeff = true;
            if (r.accept('*') && r.peek() != 't')
                r.fail("expected 't' after '*'");
        }
        std::int64_t exponent = 0;
        if (r.accept('t')) {
            exponent = 1;
            if (r.accept('^'))
                exponent = read_exponent(r);
        } else if (!have_coeff) {
            r.fail("expected coefficient or 't'");
        }
        terms[exponent] += sign * coeff;
    }

    LaurentPoly out;
    for (const auto& [k, c] : terms)
        out = add(out, LaurentPoly::monomial(c, k));
    return out;
}

} // namespace knotsurg::cli
