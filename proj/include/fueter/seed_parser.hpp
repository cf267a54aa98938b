#pragma once

// Recursive-descent parser for seed expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := number | 'z' | '(' expr ')'
//   number  := digits ('.' digits)?
//
// Whitespace is insignificant. Literals are exact (1.25 is 5/4). The
// exponent must be a nonnegative integer literal; chained exponents are
// rejected rather than given an associativity.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "fueter/error.hpp"
#include "fueter/seed.hpp"

namespace fueter {

namespace detail {

class seed_parser {
public:
    explicit seed_parser(std::string_view text) : text_(text) {}

    rational_seed parse() {
        rational_seed result = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return result;
    }

private:
    static constexpr unsigned max_exponent = 256;

    [[noreturn]] void fail(const std::string& what) const { throw syntax_error(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[nodiscard]] bool at_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    rational_seed expr() {
        rational_seed acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    rational_seed term() {
        rational_seed acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                rational_seed divisor = unary();
                if (divisor.is_zero()) {
                    throw zero_denominator("division by zero at position " + std::to_string(at));
                }
                acc = acc / divisor;
            } else {
                return acc;
            }
        }
    }

    rational_seed unary() {
        if (accept('-')) {
            return -unary();
        }
        return power();
    }

    rational_seed power() {
        rational_seed base = primary();
        if (!accept('^')) {
            return base;
        }
        skip_ws();
        if (!at_digit()) {
            fail("exponent must be a nonnegative integer literal");
        }
        unsigned long exponent = 0;
        while (at_digit()) {
            exponent = exponent * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (exponent > max_exponent) {
                fail("exponent exceeds " + std::to_string(max_exponent));
            }
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            fail("exponent must be an integer");
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            fail("chained exponents are not supported; use parentheses");
        }
        rational_seed result = rational_seed::constant(1);
        for (unsigned long n = 0; n < exponent; ++n) {
            result = result * base;
        }
        return result;
    }

    rational_seed primary() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == 'z') {
            ++pos_;
            return rational_seed::identity();
        }
        if (c == '(') {
            ++pos_;
            rational_seed inner = expr();
            if (!accept(')')) {
                skip_ws();
                fail("expected ')'");
            }
            return inner;
        }
        if (at_digit()) {
            return rational_seed::constant(number());
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    rational number() {
        integer mantissa = 0;
        integer scale = 1;
        while (at_digit()) {
            mantissa = mantissa * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            if (!at_digit()) {
                fail("expected digits after '.'");
            }
            while (at_digit()) {
                mantissa = mantissa * 10 + (text_[pos_] - '0');
                scale *= 10;
                ++pos_;
            }
        }
        return rational{mantissa, scale};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse and canonicalize a seed expression. Throws syntax_error or zero_denominator.
inline rational_seed parse_seed(std::string_view text) { return detail::seed_parser{text}.parse(); }

} // namespace fueter
