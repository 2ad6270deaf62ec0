#include "orderspec/cli/spec_parse.hpp"

#include <cctype>
#include <map>

namespace orderspec::cli {

ParseError::ParseError(const std::string& input, std::size_t pos, const std::string& what)
    : UsageError("parse error at position " + std::to_string(pos) + " in \"" + input + "\": " + what), pos_(pos) {}

namespace {

struct Parsed {
    std::string family;
    unsigned dim = 0;
    BigInt q;
    std::size_t dim_pos = 0;
    std::size_t q_pos = 0;
};

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_space() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    std::size_t pos() const { return i_; }
    bool at_end() {
        skip_space();
        return i_ == s_.size();
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(s_, i_, what); }

    void expect(char c) {
        skip_space();
        if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    bool accept(char c) {
        skip_space();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    std::string word() {
        skip_space();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-') && i_ > start) ++i_;
        if (start == i_) fail("expected a group family");
        return s_.substr(start, i_ - start);
    }
    BigInt integer() {
        skip_space();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected an integer");
        if (i_ - start > 40) throw ParseError(s_, start, "integer too long");
        return BigInt(s_.substr(start, i_ - start));
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

Parsed parse_shape(const std::string& text) {
    Cursor c(text);
    Parsed out;
    out.family = c.word();
    c.expect('(');
    c.skip_space();
    out.dim_pos = c.pos();
    BigInt dim = c.integer();
    if (dim < 1 || dim > 1000) throw ParseError(text, out.dim_pos, "dimension out of range");
    out.dim = static_cast<unsigned>(dim.get_ui());
    c.expect(',');
    c.skip_space();
    out.q_pos = c.pos();
    BigInt q = c.integer();
    if (c.accept('^')) {
        c.skip_space();
        const std::size_t epos = c.pos();
        BigInt e = c.integer();
        if (e < 1 || e > 4096) throw ParseError(text, epos, "exponent out of range");
        q = big_pow(q, e.get_ui());
    }
    out.q = q;
    c.expect(')');
    if (!c.at_end()) c.fail("unexpected trailing input");
    return out;
}

std::pair<std::uint64_t, unsigned> split_q(const std::string& text, const Parsed& p) {
    try {
        return split_prime_power(p.q);
    } catch (const UsageError& e) {
        throw ParseError(text, p.q_pos, e.what());
    }
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    const Parsed p = parse_shape(text);
    struct Entry {
        Family family;
        Sign eps;
        int shape;  // 0: dimension n, 1: 2n, 2: 2n+1
    };
    static const std::map<std::string, Entry> table = {
        {"PSL", {Family::PSL, Sign::Plus, 0}},          {"PGL", {Family::PGL, Sign::Plus, 0}},
        {"PSU", {Family::PSL, Sign::Minus, 0}},         {"PGU", {Family::PGL, Sign::Minus, 0}},
        {"Sp", {Family::Sp, Sign::Plus, 1}},            {"PSp", {Family::PSp, Sign::Plus, 1}},
        {"OmegaOdd", {Family::OmegaOdd, Sign::Plus, 2}}, {"Omega+", {Family::OmegaEven, Sign::Plus, 1}},
        {"Omega-", {Family::OmegaEven, Sign::Minus, 1}}, {"POmega+", {Family::POmegaEven, Sign::Plus, 1}},
        {"POmega-", {Family::POmegaEven, Sign::Minus, 1}},
    };
    auto it = table.find(p.family);
    if (it == table.end()) throw ParseError(text, text.find_first_not_of(" \t"), "unknown family '" + p.family + "'");
    const Entry e = it->second;
    unsigned n = p.dim;
    if (e.shape == 1) {
        if (p.dim % 2 != 0) throw ParseError(text, p.dim_pos, "dimension must be even");
        n = p.dim / 2;
    } else if (e.shape == 2) {
        if (p.dim % 2 != 1 || p.dim < 3) throw ParseError(text, p.dim_pos, "dimension must be odd and at least 3");
        n = (p.dim - 1) / 2;
    }
    const auto [prime, m] = split_q(text, p);
    GroupSpec spec{e.family, e.eps, n, prime, m};
    try {
        spec.validate();
    } catch (const UsageError& err) {
        throw ParseError(text, p.dim_pos, err.what());
    }
    return spec;
}

GLSpec parse_gl_spec(const std::string& text) {
    const Parsed p = parse_shape(text);
    if (p.family != "GL") throw ParseError(text, text.find_first_not_of(" \t"), "expected GL(n,q)");
    split_q(text, p);
    if (p.q > 1024) throw ParseError(text, p.q_pos, "q too large for the oracle");
    return {p.dim, static_cast<std::uint32_t>(p.q.get_ui())};
}

}  // namespace orderspec::cli
